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

#include "msched/scheduler.h"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <set>

#include "gtest/gtest.h"
#include "msched/rng.h"
#include "msched/verify.h"

using namespace msched;

namespace {

using Big = boost::multiprecision::cpp_dec_float_50;

// 2 ln(2m/delta) / eps^2 in 50 digits; eps and delta given as exact ratios.
uint64_t repetitions_oracle(Big eps, Big delta, uint64_t m) {
    Big v = 2 * log(Big(2 * m) / delta) / (eps * eps);
    return static_cast<uint64_t>(ceil(v));
}

std::vector<PauliString> five() {
    return {parse_pauli("Z1 @ n=3"), parse_pauli("Z2 @ n=3"), parse_pauli("X1 Z3 @ n=3"),
            parse_pauli("X1 X2 @ n=3"), parse_pauli("X2 X3 @ n=3")};
}

std::vector<MeasurementRequest> random_requests(Rng &rng, size_t max_copies) {
    size_t n = 2 + rng.below(5);
    size_t count = 1 + rng.below(20);
    std::vector<MeasurementRequest> out;
    for (size_t i = 0; i < count; ++i) {
        PauliString p(n);
        for (size_t q = 0; q < n; ++q) p.set(q, static_cast<Pauli>(rng.below(4)));
        out.push_back({p, 1 + rng.below(std::max<size_t>(1, max_copies / count))});
    }
    return out;
}

}  // namespace

TEST(required_repetitions, matches_high_precision_oracle) {
    EXPECT_EQ(required_repetitions({0.1, 0.1, 1.0}, 54), 1397u);
    EXPECT_EQ(required_repetitions({0.1, 0.1, 1.0}, 54), repetitions_oracle(Big(1) / 10, Big(1) / 10, 54));
    EXPECT_EQ(required_repetitions({0.1, 0.1, 1.0}, 1), 600u);
    EXPECT_EQ(required_repetitions({0.1, 0.1, 1.0}, 1), repetitions_oracle(Big(1) / 10, Big(1) / 10, 1));
    EXPECT_EQ(required_repetitions({1.0, 0.2, 1.0}, 1), 5u);
    EXPECT_EQ(required_repetitions({1.0, 0.2, 1.0}, 1), repetitions_oracle(Big(1), Big(1) / 5, 1));
    EXPECT_EQ(required_repetitions({2.0, 0.5, 1.0}, 3), repetitions_oracle(Big(2), Big(1) / 2, 3));
    for (uint64_t m : {1u, 7u, 54u, 135u, 2016u, 17856u}) {
        for (int e = 1; e <= 5; ++e) {
            EXPECT_EQ(required_repetitions({0.05 * e, 0.01, 1.0}, m),
                      repetitions_oracle(Big(e) / 20, Big(1) / 100, m))
                << m << " " << e;
        }
    }
}

TEST(required_repetitions, rejects_bad_spec) {
    EXPECT_THROW(required_repetitions({2.1, 0.1, 1.0}, 5), std::invalid_argument);
    EXPECT_THROW(required_repetitions({0.0, 0.1, 1.0}, 5), std::invalid_argument);
    EXPECT_THROW(required_repetitions({0.1, 1.0, 1.0}, 5), std::invalid_argument);
    EXPECT_THROW(required_repetitions({0.1, 0.1, 0.0}, 5), std::invalid_argument);
    EXPECT_THROW(required_repetitions({0.1, 0.1, 1.0}, 0), std::invalid_argument);
}

TEST(build_multiset, fraction_and_overrides) {
    auto obs = enumerate_weight_k(4, 2, WeightMode::Exactly);
    auto requests = build_multiset(obs, {0.1, 0.1, 1.0 / 50});
    ASSERT_EQ(requests.size(), 54u);
    for (const auto &r : requests) EXPECT_EQ(r.multiplicity, 28u);

    std::vector<std::optional<uint64_t>> overrides(54);
    overrides[3] = 7;
    requests = build_multiset(obs, {0.1, 0.1, 1.0 / 50}, overrides);
    EXPECT_EQ(requests[3].multiplicity, 7u);
    EXPECT_EQ(requests[4].multiplicity, 28u);

    overrides.pop_back();
    EXPECT_THROW(build_multiset(obs, {0.1, 0.1, 1.0}, overrides), std::invalid_argument);
    EXPECT_THROW(build_multiset({}, {0.1, 0.1, 1.0}), std::invalid_argument);
}

TEST(shuffled_copies, holds_every_copy) {
    auto requests = uniform_requests(five(), 3);
    requests[2].multiplicity = 5;
    auto copies = shuffled_copies(requests, 11);
    ASSERT_EQ(copies.size(), total_copies(requests));
    for (uint32_t i = 0; i < 5; ++i) {
        EXPECT_EQ(static_cast<uint64_t>(std::count(copies.begin(), copies.end(), i)), requests[i].multiplicity);
    }
    EXPECT_EQ(copies, shuffled_copies(requests, 11));
    EXPECT_NE(copies, shuffled_copies(requests, 12));
}

TEST(greedy_partition, five_observables_twice) {
    auto requests = uniform_requests(five(), 2);
    size_t best = SIZE_MAX;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto s = greedy_partition(requests, Relation::QubitWise, seed);
        EXPECT_TRUE(validate_schedule(s, requests, Relation::QubitWise).valid());
        EXPECT_GE(s.shots.size(), 5u);
        best = std::min(best, s.shots.size());
    }
    EXPECT_LE(best, 6u);
}

TEST(greedy_partition, single_observable_takes_w_shots) {
    std::vector<MeasurementRequest> requests{{parse_pauli("XZ"), 7}};
    auto s = greedy_partition(requests, Relation::QubitWise, 0);
    EXPECT_EQ(s.shots.size(), 7u);
    for (const auto &shot : s.shots) EXPECT_EQ(shot.basis.str(), "XZ");
}

TEST(greedy_partition, unassigned_qubits_get_z) {
    std::vector<MeasurementRequest> requests{{parse_pauli("X1 @ n=3"), 1}};
    auto s = greedy_partition(requests, Relation::QubitWise, 0);
    ASSERT_EQ(s.shots.size(), 1u);
    EXPECT_EQ(s.shots[0].basis.str(), "XZZ");
}

TEST(greedy_partition, four_qubit_simple_set) {
    auto requests = uniform_requests(enumerate_weight_k(4, 2, WeightMode::Exactly), 1);
    size_t best = SIZE_MAX;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        auto s = greedy_partition(requests, Relation::QubitWise, seed);
        EXPECT_GE(s.shots.size(), 9u);
        EXPECT_LE(s.shots.size(), 15u);
        best = std::min(best, s.shots.size());
    }
    EXPECT_LE(best, 13u);
}

TEST(greedy_partition, deterministic_per_seed) {
    auto requests = uniform_requests(enumerate_weight_k(5, 2, WeightMode::UpTo), 4);
    auto a = greedy_partition(requests, Relation::QubitWise, 99);
    auto b = greedy_partition(requests, Relation::QubitWise, 99);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.shots, b.shots);
}

TEST(greedy_partition, matches_reference_transcription) {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto requests = random_requests(rng, 300);
        Relation rel = trial % 3 == 0 ? Relation::FullCommute : Relation::QubitWise;
        uint64_t seed = rng.next();
        auto fast = greedy_partition(requests, rel, seed);
        auto ref = greedy_partition_reference(requests, rel, seed);
        EXPECT_EQ(fast.assignment, ref.assignment) << "trial " << trial;
        EXPECT_EQ(fast.shots.size(), ref.shots.size());
    }
}

TEST(greedy_partition, reference_refuses_large_input) {
    auto requests = uniform_requests(five(), 10);
    EXPECT_THROW(greedy_partition_reference(requests, Relation::QubitWise, 0, 49), std::length_error);
}

TEST(greedy_partition, random_instances_validate) {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto requests = random_requests(rng, 400);
        for (Relation rel : {Relation::QubitWise, Relation::FullCommute}) {
            auto s = greedy_partition(requests, rel, trial);
            auto report = validate_schedule(s, requests, rel);
            EXPECT_TRUE(report.valid()) << "trial " << trial << " " << relation_name(rel);
            uint64_t w_max = 0;
            for (const auto &r : requests) w_max = std::max(w_max, r.multiplicity);
            EXPECT_GE(s.shots.size(), w_max);
            EXPECT_LE(s.shots.size(), total_copies(requests));
        }
    }
}

TEST(greedy_partition, commute_never_worse_than_needed) {
    // XX and ZZ commute but are not qubit-wise compatible.
    std::vector<MeasurementRequest> requests{{parse_pauli("XX"), 3}, {parse_pauli("ZZ"), 3}};
    EXPECT_EQ(greedy_partition(requests, Relation::FullCommute, 0).shots.size(), 3u);
    EXPECT_EQ(greedy_partition(requests, Relation::QubitWise, 0).shots.size(), 6u);
}

TEST(greedy_partition, more_repetitions_never_fewer_shots_per_full_run) {
    auto obs = enumerate_weight_k(4, 2, WeightMode::Exactly);
    size_t previous = 0;
    for (uint64_t r : {1u, 2u, 4u, 8u}) {
        size_t best = SIZE_MAX;
        for (uint64_t seed = 0; seed < 5; ++seed) {
            best = std::min(best, greedy_partition(uniform_requests(obs, r), Relation::QubitWise, seed).shots.size());
        }
        EXPECT_GE(best, previous);
        EXPECT_GE(best, 9 * r);
        previous = best;
    }
}

TEST(greedy_partition, rejects_bad_requests) {
    EXPECT_THROW(greedy_partition({}, Relation::QubitWise, 0), std::invalid_argument);
    std::vector<MeasurementRequest> mixed{{parse_pauli("XX"), 1}, {parse_pauli("XXX"), 1}};
    EXPECT_THROW(greedy_partition(mixed, Relation::QubitWise, 0), std::invalid_argument);
    std::vector<MeasurementRequest> zero{{parse_pauli("XX"), 0}};
    EXPECT_THROW(greedy_partition(zero, Relation::QubitWise, 0), std::invalid_argument);
}

TEST(multiset_lower_bound, values) {
    auto a = multiset_lower_bound(3, 2);
    EXPECT_EQ(a.bound, 3u);
    EXPECT_DOUBLE_EQ(a.geometric, std::sqrt(6.0));
    EXPECT_EQ(multiset_lower_bound(1, 1).bound, 1u);
    EXPECT_EQ(multiset_lower_bound(9, 28).bound, 28u);
    EXPECT_THROW(multiset_lower_bound(0, 2), std::invalid_argument);
}

TEST(assemble_schedule, merges_member_letters) {
    auto requests = uniform_requests(five(), 1);
    std::vector<std::vector<size_t>> assignment{{0}, {0}, {1}, {1}, {2}};
    auto s = assemble_schedule(requests, Relation::QubitWise, 0, assignment, 3, "test");
    ASSERT_EQ(s.shots.size(), 3u);
    EXPECT_EQ(s.shots[0].basis.str(), "ZZZ");
    EXPECT_EQ(s.shots[1].basis.str(), "XXZ");
    EXPECT_EQ(s.shots[2].basis.str(), "ZXX");
    EXPECT_EQ(s.shots[1].members, (std::vector<size_t>{2, 3}));
    EXPECT_THROW(assemble_schedule(requests, Relation::QubitWise, 0, assignment, 2, "test"), std::out_of_range);
}
