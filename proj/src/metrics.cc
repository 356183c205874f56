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

#include "msched/metrics.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "msched/verify.h"

namespace msched {

namespace {

uint64_t log2_of_power(uint64_t n) {
    if (n < 4 || !std::has_single_bit(n)) {
        throw std::invalid_argument("QOT ratios need n a power of two >= 4, got " + std::to_string(n));
    }
    return static_cast<uint64_t>(std::countr_zero(n));
}

}  // namespace

double sigma_pure(uint64_t w) {
    if (w < 1) throw std::invalid_argument("sigma_pure needs w >= 1");
    return std::numbers::pi / (4.0 * std::sqrt(static_cast<double>(w)));
}

double sigma_mixed(uint64_t w) {
    if (w < 1) throw std::invalid_argument("sigma_mixed needs w >= 1");
    return 9.0 * std::numbers::pi / (32.0 * std::sqrt(static_cast<double>(w)));
}

double sigma(StateAverage avg, uint64_t w) { return avg == StateAverage::Pure ? sigma_pure(w) : sigma_mixed(w); }

double sigma_optimal(uint64_t total_shots) {
    if (total_shots < 1) throw std::invalid_argument("sigma_optimal needs M >= 1");
    return std::numbers::pi / 4.0 * std::sqrt(9.0 / static_cast<double>(total_shots));
}

double qot_avg_ratio_log2(uint64_t a) {
    if (a < 2) throw std::invalid_argument("qot_avg_ratio needs log2 n >= 2");
    double ad = static_cast<double>(a);
    // 1/(3(n-1)) C(a,i) evaluated in log space so n = 2^a may exceed double range.
    double log_n_minus_1 = ad * std::numbers::ln2 + std::log1p(-std::exp2(-ad));
    double sum = 0;
    for (uint64_t i = 1; i <= a; ++i) {
        double id = static_cast<double>(i);
        double log_binom = std::lgamma(ad + 1) - std::lgamma(id + 1) - std::lgamma(ad - id + 1);
        double weight = std::exp(log_binom - std::log(3.0) - log_n_minus_1);
        sum += weight * (1.0 / std::sqrt(2.0 * (ad - id) + 1.0) + 2.0 / std::sqrt(id));
    }
    return std::sqrt((2.0 * ad + 1.0) / 3.0) * sum;
}

double qot_avg_ratio(uint64_t n) { return qot_avg_ratio_log2(log2_of_power(n)); }

double qot_worst_ratio(uint64_t n) {
    double a = static_cast<double>(log2_of_power(n));
    return std::sqrt((2.0 * a + 1.0) / 3.0);
}

double asymptotic_constant() { return (4.0 + std::numbers::sqrt2) / (3.0 * std::numbers::sqrt3); }

ScheduleQuality schedule_quality(const Schedule &schedule, const std::vector<MeasurementRequest> &requests,
                                 uint64_t repeats, StateAverage avg, CountMode counts) {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    auto report = validate_schedule(schedule, requests, schedule.relation);
    if (!report.valid()) {
        throw std::invalid_argument("schedule_quality needs a valid schedule: " + report.violations.front().message);
    }
    if (schedule.shots.empty()) throw std::invalid_argument("schedule has no shots");

    ScheduleQuality q;
    q.total_shots = repeats * schedule.shots.size();
    // sigma and sigma_optimal share the state-average prefactor.
    double reference = sigma_optimal(q.total_shots);
    if (avg == StateAverage::Mixed) reference *= 9.0 / 8.0;

    std::vector<uint64_t> measured(requests.size());
    if (counts == CountMode::Coverage && schedule.relation == Relation::QubitWise) {
        std::vector<PauliString> bases;
        for (const auto &shot : schedule.shots) bases.push_back(shot.basis);
        std::vector<PauliString> observables;
        for (const auto &r : requests) observables.push_back(r.observable);
        measured = coverage_counts(bases, observables);
    } else {
        for (size_t i = 0; i < requests.size(); ++i) measured[i] = schedule.assignment[i].size();
    }

    double sum = 0;
    double worst = 0;
    uint64_t min_w = UINT64_MAX;
    uint64_t max_w = 0;
    for (size_t i = 0; i < requests.size(); ++i) {
        uint64_t c = repeats * measured[i];
        q.per_observable_counts.push_back(c);
        double ratio = sigma(avg, c) / reference;
        sum += ratio;
        worst = std::max(worst, ratio);
        min_w = std::min(min_w, requests[i].multiplicity);
        max_w = std::max(max_w, requests[i].multiplicity);
    }
    q.avg_sd_ratio = sum / static_cast<double>(requests.size());
    q.worst_sd_ratio = worst;
    q.uniform_multiplicity = min_w == max_w;
    q.shots_per_repetition = static_cast<double>(schedule.shots.size()) / static_cast<double>(min_w);
    return q;
}

TraceDistanceBounds trace_distance_bounds(uint64_t k, double max_eps) {
    if (k < 1) throw std::invalid_argument("trace_distance_bounds needs k >= 1");
    if (max_eps < 0) throw std::invalid_argument("trace_distance_bounds needs max_eps >= 0");
    double kd = static_cast<double>(k);
    return {std::exp2(-kd / 2.0) * max_eps, std::pow(4.0, kd) * max_eps};
}

}  // namespace msched
