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
 * Error type shared by every svbench module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svbench {

enum class Errc {
    QubitCountOutOfRange,
    MemoryBudgetExceeded,
    MissingParameter,
    UnknownGateKind,
    NonUnitaryMatrix,
    QubitIndexOutOfRange,
    DuplicateQubit,
    DenseCapExceeded,
    NonPositiveMachineParameter,
    AllocationFailure,
    TimerResolutionTooCoarse,
    MissingQubitCount,
    EmptySeries,
    NonPositiveLogValue,
    ParseError,
    InvalidPlan,
    Io,
};

[[nodiscard]] std::string_view errc_name(Errc code) noexcept;

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace svbench
