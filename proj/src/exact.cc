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

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "msched/scheduler.h"

namespace msched {

namespace {

using Clock = std::chrono::steady_clock;

struct TimedOut {};

// Conflict graph on observables: conflict[i][j] iff the two may not share a shot.
std::vector<std::vector<char>> conflict_matrix(const std::vector<MeasurementRequest> &requests, Relation relation) {
    size_t m = requests.size();
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        conflict[i][i] = 1;
        for (size_t j = i + 1; j < m; ++j) {
            if (!compatible(relation, requests[i].observable, requests[j].observable)) {
                conflict[i][j] = conflict[j][i] = 1;
            }
        }
    }
    return conflict;
}

// Heaviest clique found by greedy growth from every start vertex.
uint64_t clique_lower_bound(const std::vector<MeasurementRequest> &requests,
                            const std::vector<std::vector<char>> &conflict) {
    size_t m = requests.size();
    std::vector<size_t> by_weight(m);
    std::iota(by_weight.begin(), by_weight.end(), 0);
    std::vector<size_t> degree(m, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) degree[i] += (i != j && conflict[i][j]);
    }
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](size_t a, size_t b) {
        if (requests[a].multiplicity != requests[b].multiplicity) {
            return requests[a].multiplicity > requests[b].multiplicity;
        }
        return degree[a] > degree[b];
    });

    uint64_t best = 0;
    for (size_t start = 0; start < m; ++start) {
        std::vector<size_t> clique{start};
        uint64_t weight = requests[start].multiplicity;
        for (size_t v : by_weight) {
            if (v == start) continue;
            bool joins = std::all_of(clique.begin(), clique.end(), [&](size_t c) { return conflict[v][c] != 0; });
            if (joins) {
                clique.push_back(v);
                weight += requests[v].multiplicity;
            }
        }
        best = std::max(best, weight);
    }
    return best;
}

// Decides whether the multiset fits in exactly `limit` shots.
//
// Copies of one observable are placed in increasing shot order and a new shot
// is only ever opened at the lowest unused index; both are without loss of
// generality and remove the label symmetries.
class ShotSearch {
   public:
    ShotSearch(const std::vector<MeasurementRequest> &requests, const std::vector<std::vector<char>> &conflict,
               size_t limit, Clock::time_point deadline, uint64_t &nodes)
        : limit_(limit),
          deadline_(deadline),
          nodes_(nodes),
          m_(requests.size()),
          remaining_(m_),
          last_(m_, -1),
          blocked_(limit, std::vector<uint32_t>(m_, 0)),
          neighbours_(m_),
          lists_(m_) {
        for (size_t i = 0; i < m_; ++i) {
            remaining_[i] = requests[i].multiplicity;
            for (size_t j = 0; j < m_; ++j) {
                if (conflict[i][j]) neighbours_[i].push_back(j);
            }
        }
    }

    bool run() { return descend(); }

    const std::vector<std::vector<size_t>> &lists() const { return lists_; }

   private:
    bool feasible(size_t shot, size_t i) const { return blocked_[shot][i] == 0; }

    void place(size_t shot, size_t i) {
        for (size_t k : neighbours_[i]) ++blocked_[shot][k];
        lists_[i].push_back(shot);
        --remaining_[i];
    }

    void unplace(size_t shot, size_t i) {
        for (size_t k : neighbours_[i]) --blocked_[shot][k];
        lists_[i].pop_back();
        ++remaining_[i];
    }

    bool descend() {
        if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) throw TimedOut{};

        // Most constrained observable: fewest candidate shots.
        size_t pick = m_;
        size_t pick_options = SIZE_MAX;
        for (size_t i = 0; i < m_; ++i) {
            if (remaining_[i] == 0) continue;
            size_t options = 0;
            for (size_t s = static_cast<size_t>(last_[i] + 1); s < opened_; ++s) options += feasible(s, i);
            size_t unopened = limit_ - opened_;
            if (options + unopened < remaining_[i]) return false;
            size_t branching = options + (unopened > 0 ? 1 : 0);
            if (branching == 0) return false;
            if (branching < pick_options ||
                (branching == pick_options && remaining_[i] > remaining_[pick])) {
                pick = i;
                pick_options = branching;
            }
        }
        if (pick == m_) return true;

        int64_t saved_last = last_[pick];
        for (size_t s = static_cast<size_t>(saved_last + 1); s <= opened_ && s < limit_; ++s) {
            if (s < opened_ && !feasible(s, pick)) continue;
            bool opens = s == opened_;
            if (opens) ++opened_;
            place(s, pick);
            last_[pick] = static_cast<int64_t>(s);
            if (descend()) return true;
            last_[pick] = saved_last;
            unplace(s, pick);
            if (opens) --opened_;
        }
        return false;
    }

    size_t limit_;
    Clock::time_point deadline_;
    uint64_t &nodes_;
    size_t m_;
    size_t opened_ = 0;
    std::vector<uint64_t> remaining_;
    std::vector<int64_t> last_;
    std::vector<std::vector<uint32_t>> blocked_;
    std::vector<std::vector<size_t>> neighbours_;
    std::vector<std::vector<size_t>> lists_;
};

}  // namespace

ExactResult exact_min_shots(const std::vector<MeasurementRequest> &requests, Relation relation,
                            const ExactOptions &options) {
    if (requests.empty()) throw std::invalid_argument("No observables given");
    uint64_t total = total_copies(requests);
    if (total > options.max_copies) {
        throw std::length_error("Instance has " + std::to_string(total) + " copies; the exact solver is limited to " +
                                std::to_string(options.max_copies));
    }
    auto deadline = Clock::now() + std::chrono::milliseconds(options.budget_ms);

    ExactResult result;
    for (uint64_t seed = 0; seed < std::max<uint64_t>(1, options.warm_start_seeds); ++seed) {
        auto candidate = greedy_partition(requests, relation, seed);
        if (result.schedule.shots.empty() || candidate.shots.size() < result.schedule.shots.size()) {
            result.schedule = std::move(candidate);
        }
    }
    result.shots = result.schedule.shots.size();

    auto conflict = conflict_matrix(requests, relation);
    uint64_t max_w = 0;
    for (const auto &r : requests) max_w = std::max(max_w, r.multiplicity);
    result.lower_bound = std::max(max_w, clique_lower_bound(requests, conflict));

    try {
        for (uint64_t limit = result.lower_bound; limit < result.shots; ++limit) {
            ShotSearch search(requests, conflict, limit, deadline, result.nodes);
            if (search.run()) {
                result.schedule = assemble_schedule(requests, relation, 0, search.lists(), limit, "exact");
                result.shots = limit;
                break;
            }
            result.lower_bound = limit + 1;
        }
    } catch (const TimedOut &) {
        result.optimal = false;
        result.schedule.provenance.generator = "exact-incumbent";
        return result;
    }
    result.lower_bound = result.shots;
    result.optimal = true;
    if (result.schedule.provenance.generator != "exact") {
        result.schedule.provenance.generator = "exact";
    }
    return result;
}

}  // namespace msched
