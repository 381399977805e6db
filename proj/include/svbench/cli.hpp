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
/**
 * @file
 * Command-line front end.
 *
 * Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
 */
#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace svbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int cli_main(std::span<const std::string> args, std::ostream &out, std::ostream &err);

int cli_main(int argc, char **argv);

} // namespace svbench
