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
#include <cmath>

#include "gtest/gtest.h"
#include "msched/bounds.h"
#include "msched/metrics.h"

using namespace msched;

namespace {

std::vector<SweepRow> rows_of(const std::vector<SweepRow> &rows, const std::string &method) {
    std::vector<SweepRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const SweepRow &r) { return r.method == method; });
    return out;
}

}  // namespace

TEST(sweep, fig3_rows) {
    SweepOptions o;
    o.name = "fig3";
    o.ns = {4, 9};
    o.seeds = {0, 1};
    auto rows = run_sweep(o);
    // Per n: three reference rows, two greedy rows per seed.
    EXPECT_EQ(rows.size(), 2u * (3 + 2 * 2));
    auto ref = rows_of(rows, "reference-ceil");
    ASSERT_EQ(ref.size(), 2u);
    EXPECT_EQ(*ref[1].shots_per_repetition, 15.0);
    uint64_t w = required_repetitions({0.1, 0.1, 1.0}, 9 * 36);
    EXPECT_EQ(ref[1].shots, 15.0 * static_cast<double>(w));
    for (const auto &r : rows_of(rows, "greedy-multiset")) {
        ASSERT_TRUE(r.avg_ratio);
        EXPECT_GE(*r.avg_ratio, 0.9);
        EXPECT_GE(*r.shots_per_repetition, 9.0);
    }
}

TEST(sweep, figS1_has_repetition_column) {
    SweepOptions o;
    o.name = "figS1";
    o.ns = {4};
    o.seeds = {0};
    o.max_repetitions = 4;
    auto rows = run_sweep(o);
    ASSERT_EQ(rows.size(), 4u);
    for (uint64_t r = 1; r <= 4; ++r) {
        EXPECT_EQ(rows[r - 1].repetitions, r);
        EXPECT_GE(*rows[r - 1].shots_per_repetition, 9.0);
    }
}

TEST(sweep, figS2_closed_form_and_family_agree) {
    SweepOptions o;
    o.name = "figS2";
    o.ns = {8, 16};
    o.seeds = {0};
    auto rows = run_sweep(o);
    auto closed = rows_of(rows, "qot-closed-form");
    auto family = rows_of(rows, "qot-family");
    ASSERT_EQ(closed.size(), 2u);
    ASSERT_EQ(family.size(), 2u);
    for (size_t i = 0; i < 2; ++i) {
        EXPECT_NEAR(*closed[i].avg_ratio, *family[i].avg_ratio, 1e-9);
        EXPECT_NEAR(*closed[i].worst_ratio, *family[i].worst_ratio, 1e-9);
        EXPECT_EQ(closed[i].shots, family[i].shots);
    }
}

TEST(sweep, thread_count_does_not_change_output) {
    SweepOptions o;
    o.name = "fig3";
    o.ns = {5, 6};
    o.seeds = {0, 1, 2};
    o.threads = 1;
    auto serial = to_csv(run_sweep(o));
    o.threads = 4;
    EXPECT_EQ(serial, to_csv(run_sweep(o)));
}

TEST(sweep, rejects_bad_options) {
    SweepOptions o;
    o.name = "fig3";
    EXPECT_THROW(run_sweep(o), std::invalid_argument);
    o.ns = {4};
    o.name = "figure";
    EXPECT_THROW(run_sweep(o), std::invalid_argument);
    o.name = "figS3";
    o.ns = {12};
    EXPECT_THROW(run_sweep(o), std::invalid_argument);
}

TEST(sweep, csv_empty_cells) {
    SweepRow row;
    row.n = 4;
    row.method = "x";
    row.shots = 12;
    EXPECT_EQ(to_csv({row}), sweep_csv_header() + "\n4,x,12,,,,,\n");
}
