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

#include "msched/verify.h"

#include <algorithm>
#include <stdexcept>

namespace msched {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Incompatible:
            return "incompatible";
        case ViolationKind::DuplicateCopy:
            return "duplicate-copy";
        case ViolationKind::Shortfall:
            return "shortfall";
        case ViolationKind::BasisMismatch:
            return "basis-mismatch";
        case ViolationKind::AssignmentMismatch:
            return "assignment-mismatch";
        case ViolationKind::Malformed:
            return "malformed";
    }
    return "unknown";
}

size_t ValidationReport::count(ViolationKind kind) const {
    return static_cast<size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; }));
}

namespace {

std::string label(const std::vector<MeasurementRequest> &requests, size_t i) {
    return "#" + std::to_string(i) + " (" + requests[i].observable.str() + ")";
}

}  // namespace

ValidationReport validate_schedule(const Schedule &schedule, const std::vector<MeasurementRequest> &requests,
                                   Relation relation) {
    ValidationReport report;
    auto add = [&](Violation v) { report.violations.push_back(std::move(v)); };

    size_t m = requests.size();
    size_t n = schedule.num_qubits;
    std::vector<bool> usable(m, true);
    for (size_t i = 0; i < m; ++i) {
        if (requests[i].observable.num_qubits() != n) {
            usable[i] = false;
            add({ViolationKind::Malformed, "observable " + label(requests, i) + " has wrong qubit count", -1,
                 static_cast<int64_t>(i)});
        }
    }

    std::vector<std::vector<size_t>> derived(m);
    for (size_t s = 0; s < schedule.shots.size(); ++s) {
        const auto &shot = schedule.shots[s];
        auto shot_id = static_cast<int64_t>(s);
        std::vector<size_t> members;
        for (size_t i : shot.members) {
            if (i >= m) {
                add({ViolationKind::Malformed, "shot " + std::to_string(s) + " lists unknown observable " +
                                                   std::to_string(i),
                     shot_id, static_cast<int64_t>(i)});
                continue;
            }
            members.push_back(i);
        }

        std::vector<size_t> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 1; k < sorted.size(); ++k) {
            if (sorted[k] == sorted[k - 1] && (k < 2 || sorted[k - 2] != sorted[k])) {
                add({ViolationKind::DuplicateCopy,
                     "shot " + std::to_string(s) + " holds observable " + label(requests, sorted[k]) + " twice",
                     shot_id, static_cast<int64_t>(sorted[k])});
            }
        }
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (size_t i : sorted) derived[i].push_back(s);

        for (size_t a = 0; a < sorted.size(); ++a) {
            for (size_t b = a + 1; b < sorted.size(); ++b) {
                size_t i = sorted[a];
                size_t j = sorted[b];
                if (!usable[i] || !usable[j]) continue;
                const auto &oi = requests[i].observable;
                const auto &oj = requests[j].observable;
                if (compatible(relation, oi, oj)) continue;
                int64_t qubit = -1;
                if (relation == Relation::QubitWise) {
                    for (size_t q = 0; q < n; ++q) {
                        if (oi.get(q) != Pauli::I && oj.get(q) != Pauli::I && oi.get(q) != oj.get(q)) {
                            qubit = static_cast<int64_t>(q);
                            break;
                        }
                    }
                }
                std::string where = qubit >= 0 ? " at qubit " + std::to_string(qubit + 1) : "";
                add({ViolationKind::Incompatible,
                     "shot " + std::to_string(s) + ": " + label(requests, i) + " and " + label(requests, j) +
                         " cannot share a shot" + where,
                     shot_id, static_cast<int64_t>(i), static_cast<int64_t>(j), qubit});
            }
        }

        if (relation != Relation::QubitWise) continue;
        if (shot.basis.num_qubits() != n) {
            add({ViolationKind::Malformed, "shot " + std::to_string(s) + " basis has wrong length", shot_id});
            continue;
        }
        for (size_t i : sorted) {
            if (!usable[i]) continue;
            const auto &obs = requests[i].observable;
            for (size_t q = 0; q < n; ++q) {
                Pauli letter = obs.get(q);
                if (letter != Pauli::I && shot.basis.get(q) != letter) {
                    add({ViolationKind::BasisMismatch,
                         "shot " + std::to_string(s) + " measures " + to_char(shot.basis.get(q)) + " at qubit " +
                             std::to_string(q + 1) + " but " + label(requests, i) + " needs " + to_char(letter),
                         shot_id, static_cast<int64_t>(i), -1, static_cast<int64_t>(q)});
                }
            }
        }
    }

    for (size_t i = 0; i < m; ++i) {
        if (derived[i].size() < requests[i].multiplicity) {
            add({ViolationKind::Shortfall,
                 "observable " + label(requests, i) + " is in " + std::to_string(derived[i].size()) +
                     " shots, needs " + std::to_string(requests[i].multiplicity),
                 -1, static_cast<int64_t>(i)});
        }
    }

    if (schedule.assignment.size() != m) {
        add({ViolationKind::AssignmentMismatch, "assignment map has " + std::to_string(schedule.assignment.size()) +
                                                    " entries for " + std::to_string(m) + " observables"});
    } else {
        for (size_t i = 0; i < m; ++i) {
            auto listed = schedule.assignment[i];
            std::sort(listed.begin(), listed.end());
            if (listed != derived[i]) {
                add({ViolationKind::AssignmentMismatch,
                     "assignment for " + label(requests, i) + " disagrees with shot member lists", -1,
                     static_cast<int64_t>(i)});
            }
        }
    }
    return report;
}

std::vector<MeasurementRequest> requests_of(const Schedule &schedule) {
    std::vector<MeasurementRequest> out;
    for (size_t i = 0; i < schedule.observables.size(); ++i) {
        uint64_t w = i < schedule.provenance.multiplicities.size() ? schedule.provenance.multiplicities[i] : 1;
        out.push_back({schedule.observables[i], w});
    }
    return out;
}

ValidationReport validate_schedule(const Schedule &schedule) {
    return validate_schedule(schedule, requests_of(schedule), schedule.relation);
}

std::vector<uint64_t> coverage_counts(const std::vector<PauliString> &shots,
                                      const std::vector<PauliString> &observables) {
    std::vector<uint64_t> counts(observables.size(), 0);
    for (const auto &shot : shots) {
        for (size_t i = 0; i < observables.size(); ++i) {
            if (qubitwise_compatible(shot, observables[i])) ++counts[i];
        }
    }
    return counts;
}

}  // namespace msched
