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
#include <optional>
#include <string>
#include <vector>

#include "msched/pauli.h"
#include "msched/scheduler.h"

namespace msched {

/// One CSV row. Empty optionals print as empty cells.
struct SweepRow {
    uint64_t n = 0;
    std::string method;
    double shots = 0;
    std::optional<double> avg_ratio;
    std::optional<double> worst_ratio;
    std::optional<double> shots_per_repetition;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> repetitions;
};

struct SweepOptions {
    std::string name;              ///< fig3 | figS1 | figS2 | figS3
    std::vector<uint64_t> ns;      ///< qubit counts
    std::vector<uint64_t> seeds;
    AccuracySpec spec{0.1, 0.1, 1.0 / 50.0};
    WeightMode mode = WeightMode::Exactly;
    uint64_t max_repetitions = 100;  ///< figS1 only
    unsigned threads = 0;            ///< 0 = hardware concurrency
};

/// Runs the named sweep. Rows are sorted by (n, method, repetitions, seed), so
/// output is identical for identical options regardless of thread count.
std::vector<SweepRow> run_sweep(const SweepOptions &options);

std::string sweep_csv_header();
std::string to_csv(const std::vector<SweepRow> &rows);

}  // namespace msched
