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

#include "msched/sweep.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "msched/baselines.h"
#include "msched/bounds.h"
#include "msched/metrics.h"
#include "msched/verify.h"

namespace msched {

namespace {

using Cell = std::function<std::vector<SweepRow>()>;

// Full repetitions per observable for the weight-2 problem at n qubits.
uint64_t full_repetitions(const SweepOptions &o, size_t m) {
    AccuracySpec full = o.spec;
    full.fraction = 1.0;
    return required_repetitions(full, m);
}

uint64_t repeats_for(double fraction) { return ceil_count(1.0 / fraction); }

SweepRow make_row(uint64_t n, std::string method, double shots,
                  std::optional<double> shots_per_repetition = std::nullopt) {
    SweepRow row;
    row.n = n;
    row.method = std::move(method);
    row.shots = shots;
    row.shots_per_repetition = shots_per_repetition;
    return row;
}

SweepRow quality_row(uint64_t n, std::string method, const Schedule &s, const std::vector<MeasurementRequest> &r,
                     uint64_t repeats, std::optional<uint64_t> seed) {
    auto q = schedule_quality(s, r, repeats);
    auto row = make_row(n, std::move(method), static_cast<double>(q.total_shots));
    row.avg_ratio = q.avg_sd_ratio;
    row.worst_ratio = q.worst_sd_ratio;
    row.shots_per_repetition = q.shots_per_repetition;
    row.seed = seed;
    return row;
}

void fig3_cells(const SweepOptions &o, std::vector<Cell> &cells) {
    for (uint64_t n : o.ns) {
        auto observables = enumerate_weight_k(n, 2, o.mode);
        uint64_t w_full = full_repetitions(o, observables.size());
        cells.push_back([n, w_full] {
            auto ref = reference_partition_size(n);
            auto wf = static_cast<double>(w_full);
            std::vector<SweepRow> rows;
            auto size = static_cast<double>(ref.size);
            rows.push_back(make_row(n, "reference-ceil", size * wf, size));
            rows.push_back(make_row(n, "reference-low", ref.band_low * wf, ref.band_low));
            rows.push_back(make_row(n, "reference-high", ref.band_high * wf, ref.band_high));
            return rows;
        });
        for (uint64_t seed : o.seeds) {
            cells.push_back([n, seed, w_full, observables] {
                auto requests = uniform_requests(observables, 1);
                auto s = greedy_partition(requests, Relation::QubitWise, seed);
                double size = static_cast<double>(s.shots.size());
                auto row = make_row(n, "greedy-simple", size * static_cast<double>(w_full), size);
                row.seed = seed;
                return std::vector<SweepRow>{row};
            });
            cells.push_back([n, seed, w_full, observables, &o] {
                auto requests = build_multiset(observables, o.spec);
                auto s = greedy_partition(requests, Relation::QubitWise, seed);
                uint64_t repeats = repeats_for(o.spec.fraction);
                auto row = quality_row(n, "greedy-multiset", s, requests, repeats, seed);
                row.shots_per_repetition = row.shots / static_cast<double>(w_full);
                return std::vector<SweepRow>{row};
            });
        }
    }
}

void figS1_cells(const SweepOptions &o, std::vector<Cell> &cells) {
    for (uint64_t n : o.ns) {
        auto observables = enumerate_weight_k(n, 2, o.mode);
        for (uint64_t r = 1; r <= o.max_repetitions; ++r) {
            for (uint64_t seed : o.seeds) {
                cells.push_back([n, r, seed, observables] {
                    auto requests = uniform_requests(observables, r);
                    auto s = greedy_partition(requests, Relation::QubitWise, seed);
                    auto row = quality_row(n, "greedy-multiset", s, requests, 1, seed);
                    row.repetitions = r;
                    return std::vector<SweepRow>{row};
                });
            }
        }
    }
}

// figS2 and figS3 share rows: average and worst SD ratios side by side.
void figS2_cells(const SweepOptions &o, std::vector<Cell> &cells) {
    for (uint64_t n : o.ns) {
        if (!std::has_single_bit(n) || n < 4) {
            throw std::invalid_argument("figS2/figS3 need powers of two >= 4, got n=" + std::to_string(n));
        }
        auto observables = enumerate_weight_k(n, 2, WeightMode::Exactly);
        cells.push_back([n] {
            auto closed = make_row(n, "qot-closed-form", 6.0 * std::log2(static_cast<double>(n)) + 3.0);
            closed.avg_ratio = qot_avg_ratio(n);
            closed.worst_ratio = qot_worst_ratio(n);
            return std::vector<SweepRow>{closed};
        });
        cells.push_back([n, observables] {
            auto family = qot_family(n);
            auto s = schedule_from_bases(family.shots, observables, "qot");
            auto row = quality_row(n, "qot-family", s, requests_of(s), 1, std::nullopt);
            row.shots_per_repetition.reset();
            return std::vector<SweepRow>{row};
        });
        for (uint64_t seed : o.seeds) {
            cells.push_back([n, seed, observables, &o] {
                auto requests = build_multiset(observables, o.spec);
                auto s = greedy_partition(requests, Relation::QubitWise, seed);
                return std::vector<SweepRow>{
                    quality_row(n, "greedy-multiset", s, requests, repeats_for(o.spec.fraction), seed)};
            });
        }
    }
}

std::string format_real(double v) {
    char buf[64];
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.10g", v);
    }
    return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepOptions &options) {
    if (options.ns.empty()) throw std::invalid_argument("sweep needs at least one n");
    options.spec.validate();
    std::vector<uint64_t> default_seed{0};
    SweepOptions o = options;
    if (o.seeds.empty()) o.seeds = default_seed;

    std::vector<Cell> cells;
    if (o.name == "fig3") {
        fig3_cells(o, cells);
    } else if (o.name == "figS1") {
        figS1_cells(o, cells);
    } else if (o.name == "figS2" || o.name == "figS3") {
        figS2_cells(o, cells);
    } else {
        throw std::invalid_argument("unknown sweep '" + o.name + "' (expected fig3|figS1|figS2|figS3)");
    }

    unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepRow> rows;
    for (size_t start = 0; start < cells.size(); start += threads) {
        std::vector<std::future<std::vector<SweepRow>>> batch;
        for (size_t k = start; k < std::min(cells.size(), start + threads); ++k) {
            batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, cells[k]));
        }
        for (auto &f : batch) {
            auto part = f.get();
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        return std::tie(a.n, a.method, a.repetitions, a.seed) < std::tie(b.n, b.method, b.repetitions, b.seed);
    });
    return rows;
}

std::string sweep_csv_header() {
    return "n,method,shots,avg_ratio,worst_ratio,shots_per_repetition,seed,repetitions";
}

std::string to_csv(const std::vector<SweepRow> &rows) {
    std::string out = sweep_csv_header() + "\n";
    auto opt_real = [](const std::optional<double> &v) { return v ? format_real(*v) : std::string(); };
    auto opt_int = [](const std::optional<uint64_t> &v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto &r : rows) {
        out += std::to_string(r.n) + "," + r.method + "," + format_real(r.shots) + "," + opt_real(r.avg_ratio) + "," +
               opt_real(r.worst_ratio) + "," + opt_real(r.shots_per_repetition) + "," + opt_int(r.seed) + "," +
               opt_int(r.repetitions) + "\n";
    }
    return out;
}

}  // namespace msched
