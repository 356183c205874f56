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
#include <optional>
#include <string>
#include <vector>

#include "msched/pauli.h"

namespace msched {

/// Target accuracy for every observable: absolute error `epsilon` on each
/// expectation value, total failure probability `delta` split evenly over the
/// observables, and the `fraction` of the full repetitions placed in the multiset.
struct AccuracySpec {
    double epsilon = 0.1;
    double delta = 0.1;
    double fraction = 1.0;

    void validate() const;
};

struct MeasurementRequest {
    PauliString observable;
    uint64_t multiplicity = 1;
};

/// One preparation of the system. For qubit-wise schedules `basis` is the
/// measured letter per qubit (I while unassigned, filled with Z on finalize);
/// for full-commutation schedules there is no product basis and it stays empty.
struct Shot {
    PauliString basis;
    std::vector<size_t> members;  ///< observable indices, ascending

    bool operator==(const Shot &) const = default;
};

struct Provenance {
    std::string generator;
    std::optional<AccuracySpec> spec;
    std::vector<uint64_t> multiplicities;
    /// How many times the schedule is repeated to reach full accuracy.
    uint64_t repeats = 1;
    /// Target observables not covered at all (baseline families only).
    uint64_t uncovered = 0;
};

struct Schedule {
    size_t num_qubits = 0;
    Relation relation = Relation::QubitWise;
    uint64_t seed = 0;
    std::vector<PauliString> observables;
    std::vector<Shot> shots;
    /// observable index -> ascending shot indices
    std::vector<std::vector<size_t>> assignment;
    Provenance provenance;
};

/// ceil(2 ln(2m/delta) / eps^2): repetitions for one +-1-valued observable so
/// that all m observables are within eps with probability 1 - delta.
uint64_t required_repetitions(const AccuracySpec &spec, uint64_t m);

/// Multiplicity ceil(fraction * required_repetitions(spec, m)) per observable;
/// a present entry in `overrides` wins. `overrides` may be empty.
std::vector<MeasurementRequest> build_multiset(const std::vector<PauliString> &observables,
                                               const AccuracySpec &spec,
                                               const std::vector<std::optional<uint64_t>> &overrides = {});

/// Requests with a common multiplicity.
std::vector<MeasurementRequest> uniform_requests(const std::vector<PauliString> &observables,
                                                 uint64_t multiplicity);

/// The list of observable copies in the order the greedy pass visits them:
/// every index repeated by its multiplicity, then shuffled with `seed`.
std::vector<uint32_t> shuffled_copies(const std::vector<MeasurementRequest> &requests, uint64_t seed);

/// Greedy multicolouring. Each copy goes to the lowest-index shot that holds no
/// copy of the same observable and accepts it under `relation`.
Schedule greedy_partition(const std::vector<MeasurementRequest> &requests, Relation relation, uint64_t seed);

/// Adjacency-list transcription of the same greedy pass, kept as an oracle.
/// Throws std::length_error above `max_copies` total copies.
Schedule greedy_partition_reference(const std::vector<MeasurementRequest> &requests, Relation relation,
                                    uint64_t seed, uint64_t max_copies = 20000);

/// Builds a schedule from per-observable shot lists. Shot bases are the merged
/// member letters, unassigned qubits set to Z (qubit-wise only).
Schedule assemble_schedule(const std::vector<MeasurementRequest> &requests, Relation relation, uint64_t seed,
                           std::vector<std::vector<size_t>> assignment, size_t num_shots,
                           std::string generator);

struct ExactOptions {
    int64_t budget_ms = 60000;
    uint64_t max_copies = 200;
    /// Greedy seeds tried for the initial incumbent.
    uint64_t warm_start_seeds = 20;
};

struct ExactResult {
    bool optimal = false;        ///< false on timeout
    uint64_t shots = 0;          ///< optimum, or best incumbent on timeout
    uint64_t lower_bound = 0;    ///< proven lower bound
    uint64_t nodes = 0;
    Schedule schedule;
};

/// Minimum number of shots by branch and bound. Lower bound is the heaviest
/// clique found in the conflict graph (weights = multiplicities); each shot
/// count from there upward is decided by backtracking with most-constrained
/// observable first. Throws std::length_error above `max_copies`.
ExactResult exact_min_shots(const std::vector<MeasurementRequest> &requests, Relation relation,
                            const ExactOptions &options = {});

struct MultisetLowerBound {
    uint64_t bound = 0;     ///< max(d1, w)
    double geometric = 0;   ///< sqrt(w d1)
};

MultisetLowerBound multiset_lower_bound(uint64_t d1_lower, uint64_t w);

uint64_t total_copies(const std::vector<MeasurementRequest> &requests);

}  // namespace msched
