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

#include "msched/bounds.h"
#include "msched/pauli.h"
#include "msched/scheduler.h"

namespace msched {

/// Overlapping-tomography shot family for two-qubit marginals.
struct QotFamily {
    size_t n = 0;
    std::vector<PauliString> shots;  ///< full bases, |shots| = 6 log2(n) + 3
};

/// For every bit b of the 0-based qubit index (most significant first) and
/// every ordered pair P != Q: qubit gets P where bit b is 0, Q where it is 1.
/// Then the uniform shots X^n, Y^n, Z^n. Requires n a power of two, n >= 4.
QotFamily qot_family(size_t n);

/// Shots of qot_family(n) measuring P on qubit i and Q on qubit j (1-based):
/// 2 (log2 n - d) + 1 when P = Q, d otherwise, d = Hamming distance of i-1, j-1.
uint64_t qot_multiplicity(size_t n, size_t i, size_t j, Pauli p, Pauli q);

/// ceil(log2 n) rows; row r holds bit r (most significant first) of i-1 in column i.
struct BinaryCover {
    size_t n = 0;
    std::vector<std::vector<uint8_t>> rows;

    /// Row as a full basis: 0 -> Z, 1 -> X.
    PauliString basis(size_t row) const;
    std::string row_string(size_t row) const;
};

BinaryCover binary_cover(size_t n);

/// d independent uniformly random product bases over {X,Y,Z}^n.
std::vector<PauliString> random_pauli_scheme(size_t n, uint64_t d, uint64_t seed);

/// Shots of random product bases after which a weight-k string with per-shot
/// hit probability p is seen more than w times except with probability < 1/m:
/// (2 p w + ln m) / p^2.
Bound random_required_shots(double p, uint64_t w, uint64_t m);

struct RandomUpperBound {
    Bound improved;  ///< 8 3^(k-1) ln(2m/delta) / eps^2
    Bound prior;     ///< 68 3^k ln(2m/delta) / eps^2
};

RandomUpperBound random_upper_bound(uint64_t k, uint64_t m, double epsilon, double delta);

/// Wraps full-basis shots as a schedule over `targets`: each shot's members
/// are the targets it covers. Targets covered by no shot are dropped and
/// counted in provenance.uncovered; recorded multiplicities are coverage counts.
Schedule schedule_from_bases(const std::vector<PauliString> &bases, const std::vector<PauliString> &targets,
                             std::string generator, uint64_t seed = 0);

/// Z_i X_j for every ordered pair i != j, the target set of binary_cover.
std::vector<PauliString> zx_pairs(size_t n);

}  // namespace msched
