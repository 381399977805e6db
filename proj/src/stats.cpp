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
#include "svbench/stats.hpp"

#include "svbench/error.hpp"

#include <cmath>

namespace svbench {

SampleStats summarize(std::span<const double> xs) {
    if (xs.empty()) {
        throw Error(Errc::EmptySeries, "no samples to summarize");
    }
    SampleStats s;
    s.count = xs.size();
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    s.mean = sum / static_cast<double>(s.count);
    double sq = 0.0;
    for (double x : xs) {
        sq += (x - s.mean) * (x - s.mean);
    }
    s.sigma = std::sqrt(sq / static_cast<double>(s.count));
    s.cov = s.mean != 0.0 ? s.sigma / s.mean : 0.0;
    return s;
}

} // namespace svbench
