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

#include "msched/bounds.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msched {

uint64_t ceil_count(double x) {
    if (!std::isfinite(x) || x < 0) {
        throw std::invalid_argument("Cannot take a count ceiling of " + std::to_string(x));
    }
    double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<uint64_t>(nearest);
    }
    return static_cast<uint64_t>(std::ceil(x));
}

Bound make_bound(double value) { return {value, ceil_count(value)}; }

double hoeffding_tail(uint64_t n, double epsilon, double range) {
    if (!(range > 0)) throw std::invalid_argument("Hoeffding range must be positive");
    if (n < 1) throw std::invalid_argument("Hoeffding sample count must be >= 1");
    if (epsilon < 0) throw std::invalid_argument("Hoeffding deviation must be >= 0");
    return std::exp(-2.0 * static_cast<double>(n) * epsilon * epsilon / (range * range));
}

Bound hoeffding_samples(double epsilon, double delta, double range) {
    if (!(epsilon > 0) || !(delta > 0) || !(range > 0)) {
        throw std::invalid_argument("hoeffding_samples requires epsilon, delta, range > 0");
    }
    return make_bound(std::log(2.0 / delta) / (2.0 * epsilon * epsilon) * range * range);
}

double coverage_tail(uint64_t n, double p, double c) {
    if (!(p > 0) || !(p < 1)) throw std::invalid_argument("coverage_tail requires 0 < p < 1");
    if (n < 1) throw std::invalid_argument("coverage_tail requires n >= 1");
    double nd = static_cast<double>(n);
    if (c < 0 || c > nd * p * (1 + 1e-12)) {
        throw std::invalid_argument("coverage_tail requires 0 <= c <= n p");
    }
    double gap = p - c / nd;
    return std::exp(-2.0 * nd * gap * gap);
}

uint64_t ceil_log(uint64_t n, uint64_t base) {
    uint64_t power = 1;
    uint64_t exponent = 0;
    while (power < n) {
        power *= base;
        ++exponent;
    }
    return exponent;
}

uint64_t simple_set_lower_bound(uint64_t n) {
    if (n < 2) throw std::invalid_argument("simple_set_lower_bound requires n >= 2");
    return ceil_log(n, 2);
}

double multiset_existence_bound(uint64_t k, double a, uint64_t n) {
    if (n < 3) throw std::invalid_argument("multiset_existence_bound requires n >= 3");
    if (k < 1 || !(a > 0)) throw std::invalid_argument("multiset_existence_bound requires k >= 1, a > 0");
    double p3k = std::pow(3.0, static_cast<double>(k));
    return 2.0 * (p3k * a + p3k * p3k * static_cast<double>(k)) * std::log(static_cast<double>(n));
}

ReferencePartition reference_partition_size(uint64_t n) {
    if (n < 2) throw std::invalid_argument("reference_partition_size requires n >= 2");
    double log3 = std::log(static_cast<double>(n)) / std::log(3.0);
    return {6 * ceil_log(n, 3) + 3, 6 * log3 + 3, 6 * log3 + 9};
}

}  // namespace msched
