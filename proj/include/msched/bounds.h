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

namespace msched {

/// A real-valued bound together with its integer ceiling.
struct Bound {
    double value = 0;
    uint64_t ceiling = 0;
};

/// Ceiling that treats values within a relative 1e-9 of an integer as that
/// integer, so closed forms that evaluate to exact integers are not bumped up
/// by rounding noise.
uint64_t ceil_count(double x);

Bound make_bound(double value);

/// One-sided Hoeffding tail exp(-2 n eps^2 / range^2).
double hoeffding_tail(uint64_t n, double epsilon, double range);

/// Samples enough for accuracy eps with probability 1 - delta (two-sided):
/// ln(2/delta) / (2 eps^2) * range^2.
Bound hoeffding_samples(double epsilon, double delta, double range);

/// P(sum of n Bernoulli(p) <= c) <= exp(-2 n (p - c/n)^2), for c <= n p.
double coverage_tail(uint64_t n, double p, double c);

/// ceil(log2 n): fewest shots measuring every weight-2 string at least once
/// with product measurements.
uint64_t simple_set_lower_bound(uint64_t n);

/// 2 (3^k a + 3^(2k) k) ln n. A schedule of this size exists for the weight-k
/// multiset with multiplicity a ln n; it is not a constructive target.
double multiset_existence_bound(uint64_t k, double a, uint64_t n);

struct ReferencePartition {
    uint64_t size = 0;    ///< 6 ceil(log3 n) + 3
    double band_low = 0;  ///< 6 log3 n + 3
    double band_high = 0; ///< 6 log3 n + 9
};

ReferencePartition reference_partition_size(uint64_t n);

/// Exact ceil(log_base n) for integers, computed without floating point.
uint64_t ceil_log(uint64_t n, uint64_t base);

}  // namespace msched
