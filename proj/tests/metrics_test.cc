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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "msched/baselines.h"
#include "msched/rng.h"
#include "msched/verify.h"

using namespace msched;

namespace {

constexpr double kPi = std::numbers::pi;

// Average over the Bloch sphere of the single-shot SD of Z, sqrt(1 - <Z>^2).
double sphere_average() {
    using boost::math::quadrature::gauss_kronrod;
    auto theta = [](double t) { return std::sqrt(1 - std::cos(t) * std::cos(t)) * std::sin(t); };
    // The azimuth integral is trivially 2 pi.
    return 2 * kPi * gauss_kronrod<double, 61>::integrate(theta, 0.0, kPi, 15, 1e-14) / (4 * kPi);
}

// Same over the unit ball with the uniform measure.
double ball_average() {
    using boost::math::quadrature::gauss_kronrod;
    auto radial = [](double r) {
        auto theta = [r](double t) {
            double z = r * std::cos(t);
            return std::sqrt(1 - z * z) * std::sin(t);
        };
        return r * r * gauss_kronrod<double, 61>::integrate(theta, 0.0, kPi, 15, 1e-14);
    };
    double v = 2 * kPi * gauss_kronrod<double, 61>::integrate(radial, 0.0, 1.0, 15, 1e-14);
    return v / (4.0 / 3.0 * kPi);
}

// Mean of sigma_pure(count) / sigma_optimal(|family|) over every two-qubit
// string, counting directly in the generated family.
double qot_avg_by_counting(size_t n) {
    auto family = qot_family(n);
    auto observables = enumerate_weight_k(n, 2, WeightMode::Exactly);
    auto counts = coverage_counts(family.shots, observables);
    double sum = 0;
    for (auto c : counts) sum += sigma_pure(c) / sigma_optimal(family.shots.size());
    return sum / static_cast<double>(counts.size());
}

double qot_worst_by_counting(size_t n) {
    auto family = qot_family(n);
    auto counts = coverage_counts(family.shots, enumerate_weight_k(n, 2, WeightMode::Exactly));
    uint64_t least = *std::min_element(counts.begin(), counts.end());
    return sigma_pure(least) / sigma_optimal(family.shots.size());
}

const char *kOptimalNine[] = {"XXXY", "XYYZ", "XZZX", "YXYX", "YYZY", "YZXZ", "ZYXX", "ZZYY", "ZXZZ"};

}  // namespace

TEST(sigma, closed_forms) {
    EXPECT_NEAR(sigma_pure(1), kPi / 4, 1e-15);
    EXPECT_NEAR(sigma_pure(4), kPi / 8, 1e-15);
    EXPECT_NEAR(sigma_mixed(1), 9 * kPi / 32, 1e-15);
    EXPECT_NEAR(sigma(StateAverage::Mixed, 9), 3 * kPi / 32, 1e-15);
    EXPECT_NEAR(sigma_optimal(9), kPi / 4, 1e-15);
    EXPECT_NEAR(sigma_optimal(36), kPi / 8, 1e-15);
}

TEST(sigma, quadrature_oracle) {
    EXPECT_NEAR(sphere_average(), sigma_pure(1), 1e-6);
    EXPECT_NEAR(ball_average(), sigma_mixed(1), 1e-6);
}

TEST(sigma, monte_carlo_bloch_sphere) {
    Rng rng(5);
    const int samples = 200000;
    double sum = 0;
    for (int s = 0; s < samples; ++s) {
        double z = 2 * rng.uniform() - 1;  // uniform on the sphere by Archimedes
        sum += std::sqrt(1 - z * z);
    }
    EXPECT_NEAR(sum / samples, kPi / 4, 0.005);
}

TEST(qot_avg_ratio, matches_counting_oracle) {
    for (size_t n : {4u, 8u, 16u, 32u, 64u}) {
        EXPECT_NEAR(qot_avg_ratio(n), qot_avg_by_counting(n), 1e-9) << n;
    }
}

TEST(qot_avg_ratio, peaks_at_thirty_two) {
    double peak = 0;
    uint64_t arg = 0;
    for (uint64_t a = 2; a <= 20; ++a) {
        double v = qot_avg_ratio_log2(a);
        if (v > peak) {
            peak = v;
            arg = a;
        }
    }
    EXPECT_EQ(arg, 5u);
    EXPECT_GE(peak, 1.13);
    EXPECT_LE(peak, 1.15);
    EXPECT_DOUBLE_EQ(qot_avg_ratio(32), qot_avg_ratio_log2(5));
}

TEST(qot_avg_ratio, approaches_asymptotic_constant) {
    EXPECT_NEAR(asymptotic_constant(), (4 + std::sqrt(2.0)) / (3 * std::sqrt(3.0)), 1e-15);
    EXPECT_NEAR(asymptotic_constant(), 1.0420, 1e-4);
    double v = qot_avg_ratio_log2(60);
    EXPECT_LT(std::abs(v - asymptotic_constant()) / asymptotic_constant(), 0.03);
    double far = qot_avg_ratio_log2(1000);
    EXPECT_NEAR(far, asymptotic_constant(), 0.005);
    EXPECT_THROW(qot_avg_ratio(12), std::invalid_argument);
}

TEST(qot_worst_ratio, matches_least_count_oracle) {
    for (size_t n : {4u, 8u, 16u}) {
        EXPECT_NEAR(qot_worst_ratio(n), qot_worst_by_counting(n), 1e-12) << n;
        double a = std::log2(static_cast<double>(n));
        EXPECT_NEAR(qot_worst_ratio(n), std::sqrt((2 * a + 1) / 3), 1e-12);
    }
}

TEST(schedule_quality, five_observable_schedule) {
    std::vector<PauliString> obs{parse_pauli("Z1 @ n=3"), parse_pauli("Z2 @ n=3"), parse_pauli("X1 Z3 @ n=3"),
                                 parse_pauli("X1 X2 @ n=3"), parse_pauli("X2 X3 @ n=3")};
    auto requests = uniform_requests(obs, 2);
    std::vector<std::vector<size_t>> assignment{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    auto s = assemble_schedule(requests, Relation::QubitWise, 0, assignment, 5, "manual");
    auto q = schedule_quality(s, requests);
    EXPECT_DOUBLE_EQ(q.shots_per_repetition, 2.5);
    EXPECT_EQ(q.total_shots, 5u);
    EXPECT_TRUE(q.uniform_multiplicity);
    auto assigned = schedule_quality(s, requests, 3, StateAverage::Pure, CountMode::Assigned);
    EXPECT_EQ(assigned.total_shots, 15u);
    for (auto c : assigned.per_observable_counts) EXPECT_EQ(c, 6u);
}

TEST(schedule_quality, qot_family_worst_is_closed_form) {
    auto s = schedule_from_bases(qot_family(4).shots, enumerate_weight_k(4, 2, WeightMode::Exactly), "qot");
    auto q = schedule_quality(s, requests_of(s));
    EXPECT_NEAR(q.worst_sd_ratio, qot_worst_ratio(4), 1e-12);
    EXPECT_NEAR(q.avg_sd_ratio, qot_avg_ratio(4), 1e-12);
}

TEST(schedule_quality, perfect_nine_basis_is_optimal) {
    std::vector<PauliString> bases;
    for (auto b : kOptimalNine) bases.push_back(parse_pauli(b));
    auto s = schedule_from_bases(bases, enumerate_weight_k(4, 2, WeightMode::Exactly), "nine");
    for (auto mode : {StateAverage::Pure, StateAverage::Mixed}) {
        auto q = schedule_quality(s, requests_of(s), 4, mode);
        EXPECT_NEAR(q.avg_sd_ratio, 1.0, 1e-12);
        EXPECT_NEAR(q.worst_sd_ratio, 1.0, 1e-12);
    }
}

TEST(schedule_quality, rejects_invalid_schedule) {
    auto requests = uniform_requests({parse_pauli("XX"), parse_pauli("ZZ")}, 1);
    auto s = assemble_schedule(requests, Relation::QubitWise, 0, {{0}, {1}}, 2, "manual");
    s.shots[0].members.push_back(1);
    EXPECT_THROW(schedule_quality(s, requests), std::invalid_argument);
}

TEST(trace_distance_bounds, examples) {
    auto b = trace_distance_bounds(2, 0.1);
    EXPECT_NEAR(b.lower, 0.05, 1e-15);
    EXPECT_NEAR(b.upper, 1.6, 1e-15);
    auto z = trace_distance_bounds(5, 0.0);
    EXPECT_EQ(z.lower, 0.0);
    EXPECT_EQ(z.upper, 0.0);
}
