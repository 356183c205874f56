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
#include <utility>
#include <vector>

#include "msched/scheduler.h"

namespace msched {

/// Which class of states the standard deviation is averaged over.
enum class StateAverage { Pure, Mixed };

/// Average SD of a +-1 observable measured w times, over pure states: pi / (4 sqrt w).
double sigma_pure(uint64_t w);
/// Same over the Bloch ball: 9 pi / (32 sqrt w).
double sigma_mixed(uint64_t w);
double sigma(StateAverage avg, uint64_t w);

/// Reference SD when each two-qubit observable gets every ninth of M shots:
/// (pi/4) sqrt(9/M).
double sigma_optimal(uint64_t total_shots);

/// Average QOT SD over all two-qubit strings, normalized by sigma_optimal.
/// Requires n a power of two >= 4. Stable for n up to 2^1000.
double qot_avg_ratio(uint64_t n);
double qot_avg_ratio_log2(uint64_t log2_n);

/// Worst QOT SD over two-qubit strings, normalized: sqrt((2 log2 n + 1) / 3).
double qot_worst_ratio(uint64_t n);

/// Large-n limit of qot_avg_ratio: (4 + sqrt 2) / (3 sqrt 3).
double asymptotic_constant();

/// How often an observable counts as measured. A finalized qubit-wise shot
/// measures every observable its basis agrees with, not only its members.
enum class CountMode {
    Coverage,  ///< shots whose basis measures the observable (qubit-wise schedules)
    Assigned,  ///< |assignment[o]|
};

struct ScheduleQuality {
    uint64_t total_shots = 0;                     ///< repeats * |shots|
    std::vector<uint64_t> per_observable_counts;  ///< repeats * shots counted per CountMode
    double avg_sd_ratio = 0;
    double worst_sd_ratio = 0;
    double shots_per_repetition = 0;
    /// False when multiplicities differ; shots_per_repetition then divides by
    /// the smallest multiplicity.
    bool uniform_multiplicity = true;
};

/// SD ratios with M = repeats * |shots| and per-observable count c_o = repeats *
/// (shots measuring o). Full-commutation schedules have no product basis and
/// always use assigned counts. Requires a schedule that validates against
/// `requests`; throws otherwise.
ScheduleQuality schedule_quality(const Schedule &schedule, const std::vector<MeasurementRequest> &requests,
                                 uint64_t repeats = 1, StateAverage avg = StateAverage::Pure,
                                 CountMode counts = CountMode::Coverage);

struct TraceDistanceBounds {
    double lower = 0;  ///< 2^(-k/2) max|eps|
    double upper = 0;  ///< 4^k max|eps|
};

/// Bounds on the trace distance of a k-qubit state rebuilt from Pauli
/// expectation values that are each off by at most max_eps.
TraceDistanceBounds trace_distance_bounds(uint64_t k, double max_eps);

}  // namespace msched
