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

#include "msched/pauli.h"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace msched {

namespace {

constexpr size_t words_for(size_t n) { return (n + 63) / 64; }

void require_same_length(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli string length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

size_t parse_size(std::string_view text, std::string_view what) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("Invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

char to_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("Invalid Pauli character '") + c + "'");
    }
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::from_dense(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Empty Pauli string");
    }
    PauliString s(text.size());
    for (size_t q = 0; q < text.size(); ++q) {
        s.set(q, pauli_from_char(text[q]));
    }
    return s;
}

Pauli PauliString::get(size_t q) const {
    uint64_t bit = uint64_t{1} << (q & 63);
    uint8_t x = (xs_[q >> 6] & bit) ? 1 : 0;
    uint8_t z = (zs_[q >> 6] & bit) ? 2 : 0;
    return static_cast<Pauli>(x | z);
}

void PauliString::set(size_t q, Pauli p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit index " + std::to_string(q) + " out of range");
    }
    uint64_t bit = uint64_t{1} << (q & 63);
    auto v = static_cast<uint8_t>(p);
    xs_[q >> 6] = (v & 1) ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = (v & 2) ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); ++k) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; ++q) {
        out[q] = to_char(get(q));
    }
    return out;
}

PauliString parse_pauli(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw std::invalid_argument("Empty Pauli string");
    }
    auto at = text.find('@');
    if (at == std::string_view::npos) {
        return PauliString::from_dense(text);
    }

    auto size_part = trim(text.substr(at + 1));
    if (size_part.size() < 2 || std::tolower(static_cast<unsigned char>(size_part[0])) != 'n') {
        throw std::invalid_argument("Expected '@ n=N' in '" + std::string(text) + "'");
    }
    size_part = trim(size_part.substr(1));
    if (size_part.empty() || size_part[0] != '=') {
        throw std::invalid_argument("Expected '@ n=N' in '" + std::string(text) + "'");
    }
    size_t n = parse_size(trim(size_part.substr(1)), "qubit count");
    if (n == 0) {
        throw std::invalid_argument("Qubit count must be positive");
    }

    PauliString s(n);
    std::vector<bool> seen(n, false);
    auto body = trim(text.substr(0, at));
    while (!body.empty()) {
        size_t end = 0;
        while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
        auto token = body.substr(0, end);
        body = trim(body.substr(end));
        if (token.size() < 2) {
            throw std::invalid_argument("Invalid sparse term '" + std::string(token) + "'");
        }
        Pauli p = pauli_from_char(token[0]);
        size_t index = parse_size(token.substr(1), "qubit index");
        if (index < 1 || index > n) {
            throw std::out_of_range("Qubit index " + std::to_string(index) + " out of range for n=" +
                                    std::to_string(n));
        }
        if (seen[index - 1]) {
            throw std::invalid_argument("Duplicate qubit index " + std::to_string(index));
        }
        seen[index - 1] = true;
        s.set(index - 1, p);
    }
    return s;
}

bool qubitwise_compatible(const PauliString &a, const PauliString &b) {
    require_same_length(a, b);
    const auto &ax = a.xs();
    const auto &az = a.zs();
    const auto &bx = b.xs();
    const auto &bz = b.zs();
    for (size_t w = 0; w < ax.size(); ++w) {
        uint64_t both = (ax[w] | az[w]) & (bx[w] | bz[w]);
        if (both & ((ax[w] ^ bx[w]) | (az[w] ^ bz[w]))) {
            return false;
        }
    }
    return true;
}

bool fully_commutes(const PauliString &a, const PauliString &b) {
    require_same_length(a, b);
    // Symplectic product: parity of x_a.z_b + z_a.x_b.
    uint64_t parity = 0;
    for (size_t w = 0; w < a.num_words(); ++w) {
        parity ^= (a.xs()[w] & b.zs()[w]) ^ (a.zs()[w] & b.xs()[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

std::string relation_name(Relation r) { return r == Relation::QubitWise ? "qwc" : "commute"; }

Relation relation_from_name(std::string_view name) {
    if (name == "qwc") return Relation::QubitWise;
    if (name == "commute") return Relation::FullCommute;
    throw std::invalid_argument("Unknown relation '" + std::string(name) + "' (expected qwc|commute)");
}

bool compatible(Relation r, const PauliString &a, const PauliString &b) {
    return r == Relation::QubitWise ? qubitwise_compatible(a, b) : fully_commutes(a, b);
}

std::vector<PauliString> enumerate_weight_k(size_t n, size_t k, WeightMode mode) {
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("enumerate_weight_k requires 1 <= k <= n (got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    }
    static constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    std::vector<PauliString> out;
    size_t first = mode == WeightMode::Exactly ? k : 1;
    for (size_t weight = first; weight <= k; ++weight) {
        std::vector<size_t> support(weight);
        for (size_t j = 0; j < weight; ++j) support[j] = j;
        while (true) {
            std::vector<size_t> letters(weight, 0);
            while (true) {
                PauliString s(n);
                for (size_t j = 0; j < weight; ++j) s.set(support[j], kLetters[letters[j]]);
                out.push_back(std::move(s));
                size_t j = weight;
                while (j > 0 && letters[j - 1] == 2) letters[--j] = 0;
                if (j == 0) break;
                ++letters[j - 1];
            }
            // Next combination of positions.
            size_t j = weight;
            while (j > 0 && support[j - 1] == n - weight + (j - 1)) --j;
            if (j == 0) break;
            ++support[j - 1];
            for (size_t t = j; t < weight; ++t) support[t] = support[t - 1] + 1;
        }
    }
    return out;
}

}  // namespace msched

size_t std::hash<msched::PauliString>::operator()(const msched::PauliString &s) const noexcept {
    size_t h = s.num_qubits();
    for (size_t w = 0; w < s.num_words(); ++w) {
        h ^= std::hash<uint64_t>{}(s.xs()[w] * 0x9E3779B97F4A7C15ULL + s.zs()[w]) + (h << 6) + (h >> 2);
    }
    return h;
}
