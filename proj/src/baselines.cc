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

#include "msched/baselines.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "msched/rng.h"
#include "msched/verify.h"

namespace msched {

namespace {

constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};

size_t require_power_of_two(size_t n) {
    if (n < 4 || !std::has_single_bit(n)) {
        throw std::invalid_argument("QOT family needs n a power of two >= 4, got " + std::to_string(n));
    }
    return static_cast<size_t>(std::countr_zero(n));
}

}  // namespace

QotFamily qot_family(size_t n) {
    size_t bits = require_power_of_two(n);
    QotFamily family{n, {}};
    for (size_t b = 0; b < bits; ++b) {
        size_t shift = bits - 1 - b;
        for (Pauli p : kLetters) {
            for (Pauli q : kLetters) {
                if (p == q) continue;
                PauliString shot(n);
                for (size_t i = 0; i < n; ++i) shot.set(i, ((i >> shift) & 1) ? q : p);
                family.shots.push_back(std::move(shot));
            }
        }
    }
    for (Pauli p : kLetters) {
        PauliString shot(n);
        for (size_t i = 0; i < n; ++i) shot.set(i, p);
        family.shots.push_back(std::move(shot));
    }
    return family;
}

uint64_t qot_multiplicity(size_t n, size_t i, size_t j, Pauli p, Pauli q) {
    size_t bits = require_power_of_two(n);
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
        throw std::invalid_argument("qot_multiplicity needs distinct qubits in 1..n");
    }
    if (p == Pauli::I || q == Pauli::I) throw std::invalid_argument("qot_multiplicity needs non-identity letters");
    auto d = static_cast<uint64_t>(std::popcount((i - 1) ^ (j - 1)));
    return p == q ? 2 * (bits - d) + 1 : d;
}

PauliString BinaryCover::basis(size_t row) const {
    PauliString s(n);
    for (size_t i = 0; i < n; ++i) s.set(i, rows[row][i] ? Pauli::X : Pauli::Z);
    return s;
}

std::string BinaryCover::row_string(size_t row) const {
    std::string out;
    for (uint8_t bit : rows[row]) out.push_back(bit ? '1' : '0');
    return out;
}

BinaryCover binary_cover(size_t n) {
    if (n < 2) throw std::invalid_argument("binary_cover needs n >= 2");
    size_t count = ceil_log(n, 2);
    BinaryCover cover{n, {}};
    for (size_t r = 0; r < count; ++r) {
        size_t shift = count - 1 - r;
        std::vector<uint8_t> row(n);
        for (size_t i = 0; i < n; ++i) row[i] = static_cast<uint8_t>((i >> shift) & 1);
        cover.rows.push_back(std::move(row));
    }
    return cover;
}

std::vector<PauliString> random_pauli_scheme(size_t n, uint64_t d, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_pauli_scheme needs n >= 1");
    if (d < 1) throw std::invalid_argument("random_pauli_scheme needs d >= 1");
    Rng rng(seed);
    std::vector<PauliString> out;
    out.reserve(d);
    for (uint64_t s = 0; s < d; ++s) {
        PauliString shot(n);
        for (size_t q = 0; q < n; ++q) shot.set(q, kLetters[rng.below(3)]);
        out.push_back(std::move(shot));
    }
    return out;
}

Bound random_required_shots(double p, uint64_t w, uint64_t m) {
    if (!(p > 0) || p > 1) throw std::invalid_argument("random_required_shots needs 0 < p <= 1");
    if (w < 1 || m < 2) throw std::invalid_argument("random_required_shots needs w >= 1, m >= 2");
    return make_bound((2 * p * static_cast<double>(w) + std::log(static_cast<double>(m))) / (p * p));
}

RandomUpperBound random_upper_bound(uint64_t k, uint64_t m, double epsilon, double delta) {
    if (k < 1 || m < 1) throw std::invalid_argument("random_upper_bound needs k >= 1, m >= 1");
    if (!(epsilon > 0) || !(delta > 0) || !(delta < 1)) {
        throw std::invalid_argument("random_upper_bound needs epsilon > 0 and 0 < delta < 1");
    }
    double log_term = std::log(2.0 * static_cast<double>(m) / delta) / (epsilon * epsilon);
    double p3 = std::pow(3.0, static_cast<double>(k - 1));
    return {make_bound(8 * p3 * log_term), make_bound(68 * 3 * p3 * log_term)};
}

std::vector<PauliString> zx_pairs(size_t n) {
    std::vector<PauliString> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            PauliString s(n);
            s.set(i, Pauli::Z);
            s.set(j, Pauli::X);
            out.push_back(std::move(s));
        }
    }
    return out;
}

Schedule schedule_from_bases(const std::vector<PauliString> &bases, const std::vector<PauliString> &targets,
                             std::string generator, uint64_t seed) {
    if (bases.empty()) throw std::invalid_argument("No shots given");
    size_t n = bases.front().num_qubits();
    auto counts = coverage_counts(bases, targets);

    std::vector<size_t> kept;
    for (size_t t = 0; t < targets.size(); ++t) {
        if (counts[t] > 0) kept.push_back(t);
    }
    Schedule s;
    s.num_qubits = n;
    s.relation = Relation::QubitWise;
    s.seed = seed;
    s.provenance.generator = std::move(generator);
    s.provenance.uncovered = targets.size() - kept.size();
    s.assignment.resize(kept.size());
    for (const auto &b : bases) s.shots.push_back({b, {}});
    for (size_t k = 0; k < kept.size(); ++k) {
        const auto &obs = targets[kept[k]];
        s.observables.push_back(obs);
        s.provenance.multiplicities.push_back(counts[kept[k]]);
        for (size_t shot = 0; shot < bases.size(); ++shot) {
            if (qubitwise_compatible(bases[shot], obs)) {
                s.shots[shot].members.push_back(k);
                s.assignment[k].push_back(shot);
            }
        }
    }
    return s;
}

}  // namespace msched
