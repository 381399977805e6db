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
#include "svbench/error.hpp"

namespace svbench {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::QubitCountOutOfRange:
        return "QubitCountOutOfRange";
    case Errc::MemoryBudgetExceeded:
        return "MemoryBudgetExceeded";
    case Errc::MissingParameter:
        return "MissingParameter";
    case Errc::UnknownGateKind:
        return "UnknownGateKind";
    case Errc::NonUnitaryMatrix:
        return "NonUnitaryMatrix";
    case Errc::QubitIndexOutOfRange:
        return "QubitIndexOutOfRange";
    case Errc::DuplicateQubit:
        return "DuplicateQubit";
    case Errc::DenseCapExceeded:
        return "DenseCapExceeded";
    case Errc::NonPositiveMachineParameter:
        return "NonPositiveMachineParameter";
    case Errc::AllocationFailure:
        return "AllocationFailure";
    case Errc::TimerResolutionTooCoarse:
        return "TimerResolutionTooCoarse";
    case Errc::MissingQubitCount:
        return "MissingQubitCount";
    case Errc::EmptySeries:
        return "EmptySeries";
    case Errc::NonPositiveLogValue:
        return "NonPositiveLogValue";
    case Errc::ParseError:
        return "ParseError";
    case Errc::InvalidPlan:
        return "InvalidPlan";
    case Errc::Io:
        return "Io";
    }
    return "Unknown";
}

} // namespace svbench
