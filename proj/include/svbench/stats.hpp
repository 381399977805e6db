// Copyright 2026 The svbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <span>

namespace svbench {

/// Mean, population standard deviation (divide by N) and CoV = sigma/mean.
struct SampleStats {
    std::size_t count = 0;
    double mean = 0.0;
    double sigma = 0.0;
    double cov = 0.0; ///< 0 when mean == 0
};

/// Throws EmptySeries on an empty sample.
[[nodiscard]] SampleStats summarize(std::span<const double> xs);

} // namespace svbench
