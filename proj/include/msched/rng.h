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
#include <random>
#include <span>
#include <utility>

namespace msched {

/// Seeded generator for every randomized routine. std::mt19937_64's output
/// sequence is fixed by the standard; the bounded draw and the shuffle below
/// are written out so results do not depend on the standard library vendor.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0, by rejection sampling.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (true) {
            uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates, from the back.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace msched
