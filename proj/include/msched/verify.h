// Copyright 2026 The msched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msched/pauli.h"
#include "msched/scheduler.h"

namespace msched {

enum class ViolationKind {
    Incompatible,        ///< two members of a shot may not be measured together
    DuplicateCopy,       ///< an observable appears twice in one shot
    Shortfall,           ///< fewer shots than the requested multiplicity
    BasisMismatch,       ///< a member's letter disagrees with the shot basis
    AssignmentMismatch,  ///< assignment map disagrees with shot member lists
    Malformed,           ///< out-of-range indices, wrong lengths
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
    int64_t shot = -1;
    int64_t observable = -1;
    int64_t other = -1;
    int64_t qubit = -1;  ///< 0-based; -1 when not applicable
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    size_t count(ViolationKind kind) const;
};

/// Checks a schedule against the requests from its shots' member lists alone,
/// then cross-checks the assignment map. Never throws on malformed content.
ValidationReport validate_schedule(const Schedule &schedule, const std::vector<MeasurementRequest> &requests,
                                   Relation relation);

/// Same, using the requests recorded in the schedule itself.
ValidationReport validate_schedule(const Schedule &schedule);

/// Number of full-basis shots that measure each observable.
std::vector<uint64_t> coverage_counts(const std::vector<PauliString> &shots,
                                      const std::vector<PauliString> &observables);

std::vector<MeasurementRequest> requests_of(const Schedule &schedule);

}  // namespace msched
