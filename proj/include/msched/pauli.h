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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace msched {

/// Single-qubit Pauli letter. The two low bits are the (x, z) symplectic pair:
/// I=00, X=x, Z=z, Y=x|z.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// A tensor product of single-qubit Pauli letters on a fixed number of qubits,
/// stored as two bit planes so that compatibility checks run a word at a time.
///
/// Qubits are 0-based internally. Text forms use 1-based indices.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Dense form, e.g. "XIZY" (case-insensitive).
    static PauliString from_dense(std::string_view text);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_words() const { return xs_.size(); }

    Pauli get(size_t q) const;
    void set(size_t q, Pauli p);

    size_t weight() const;
    /// Canonical dense uppercase text.
    std::string str() const;

    const std::vector<uint64_t> &xs() const { return xs_; }
    const std::vector<uint64_t> &zs() const { return zs_; }
    uint64_t support_word(size_t w) const { return xs_[w] | zs_[w]; }

    bool operator==(const PauliString &other) const = default;
    bool operator<(const PauliString &other) const { return str() < other.str(); }

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Parses either the dense form ("XXYY") or the sparse form ("X1 Z3 @ n=4").
/// The sparse form requires the "@ n=N" suffix here; files may omit it (see io.h).
PauliString parse_pauli(std::string_view text);

/// True iff at every qubit the letters agree or at least one is I.
bool qubitwise_compatible(const PauliString &a, const PauliString &b);

/// True iff the strings commute as operators (even number of anticommuting qubits).
bool fully_commutes(const PauliString &a, const PauliString &b);

enum class Relation { QubitWise, FullCommute };

std::string relation_name(Relation r);
Relation relation_from_name(std::string_view name);

/// Whether two distinct observable instances may share a shot under `r`.
/// Equal strings compare true; the copy rule lives in the scheduler.
bool compatible(Relation r, const PauliString &a, const PauliString &b);

enum class WeightMode { Exactly, UpTo };

/// Every Pauli string on `n` qubits with weight exactly `k` (or 1..k for UpTo).
/// Ordered by weight, then support positions lexicographically, then letters in
/// X < Y < Z order over the support.
std::vector<PauliString> enumerate_weight_k(size_t n, size_t k, WeightMode mode);

}  // namespace msched

template <>
struct std::hash<msched::PauliString> {
    size_t operator()(const msched::PauliString &s) const noexcept;
};
