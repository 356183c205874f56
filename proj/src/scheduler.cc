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
#include <cmath>
#include <stdexcept>

#include "msched/bounds.h"
#include "msched/rng.h"

namespace msched {

namespace {

size_t common_length(const std::vector<MeasurementRequest> &requests) {
    if (requests.empty()) throw std::invalid_argument("No observables given");
    size_t n = requests.front().observable.num_qubits();
    for (const auto &r : requests) {
        if (r.observable.num_qubits() != n) {
            throw std::invalid_argument("Observables have different qubit counts");
        }
        if (r.multiplicity < 1) throw std::invalid_argument("Multiplicity must be >= 1");
    }
    return n;
}

// Per-shot partial product basis, stored as flat bit planes.
class BasisTable {
   public:
    explicit BasisTable(size_t num_words) : words_(num_words) {}

    size_t size() const { return num_shots_; }

    void add_shot() {
        mask_.resize(mask_.size() + words_, 0);
        xs_.resize(xs_.size() + words_, 0);
        zs_.resize(zs_.size() + words_, 0);
        ++num_shots_;
    }

    bool accepts(size_t shot, const PauliString &p, const std::vector<size_t> &active_words) const {
        size_t base = shot * words_;
        for (size_t w : active_words) {
            uint64_t overlap = mask_[base + w] & p.support_word(w);
            if (overlap & ((xs_[base + w] ^ p.xs()[w]) | (zs_[base + w] ^ p.zs()[w]))) return false;
        }
        return true;
    }

    void place(size_t shot, const PauliString &p, const std::vector<size_t> &active_words) {
        size_t base = shot * words_;
        for (size_t w : active_words) {
            mask_[base + w] |= p.support_word(w);
            xs_[base + w] |= p.xs()[w];
            zs_[base + w] |= p.zs()[w];
        }
    }

   private:
    size_t words_;
    size_t num_shots_ = 0;
    std::vector<uint64_t> mask_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

std::vector<size_t> active_words(const PauliString &p) {
    std::vector<size_t> out;
    for (size_t w = 0; w < p.num_words(); ++w) {
        if (p.support_word(w)) out.push_back(w);
    }
    return out;
}

}  // namespace

void AccuracySpec::validate() const {
    if (!(epsilon > 0) || epsilon > 2) {
        throw std::invalid_argument("epsilon must lie in (0, 2], got " + std::to_string(epsilon));
    }
    if (!(delta > 0) || !(delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1), got " + std::to_string(delta));
    }
    if (!(fraction > 0) || fraction > 1) {
        throw std::invalid_argument("fraction must lie in (0, 1], got " + std::to_string(fraction));
    }
}

uint64_t required_repetitions(const AccuracySpec &spec, uint64_t m) {
    if (m < 1) throw std::invalid_argument("required_repetitions needs m >= 1");
    spec.validate();
    double w = 2.0 * std::log(2.0 * static_cast<double>(m) / spec.delta) / (spec.epsilon * spec.epsilon);
    return ceil_count(w);
}

std::vector<MeasurementRequest> build_multiset(const std::vector<PauliString> &observables,
                                               const AccuracySpec &spec,
                                               const std::vector<std::optional<uint64_t>> &overrides) {
    if (observables.empty()) throw std::invalid_argument("No observables given");
    if (!overrides.empty() && overrides.size() != observables.size()) {
        throw std::invalid_argument("Override list length does not match observables");
    }
    uint64_t full = required_repetitions(spec, observables.size());
    uint64_t scaled = std::max<uint64_t>(1, ceil_count(spec.fraction * static_cast<double>(full)));
    std::vector<MeasurementRequest> out;
    out.reserve(observables.size());
    for (size_t i = 0; i < observables.size(); ++i) {
        uint64_t w = scaled;
        if (!overrides.empty() && overrides[i]) w = *overrides[i];
        if (w < 1) throw std::invalid_argument("Multiplicity override must be >= 1");
        out.push_back({observables[i], w});
    }
    common_length(out);
    return out;
}

std::vector<MeasurementRequest> uniform_requests(const std::vector<PauliString> &observables,
                                                 uint64_t multiplicity) {
    std::vector<MeasurementRequest> out;
    out.reserve(observables.size());
    for (const auto &o : observables) out.push_back({o, multiplicity});
    return out;
}

uint64_t total_copies(const std::vector<MeasurementRequest> &requests) {
    uint64_t total = 0;
    for (const auto &r : requests) total += r.multiplicity;
    return total;
}

std::vector<uint32_t> shuffled_copies(const std::vector<MeasurementRequest> &requests, uint64_t seed) {
    std::vector<uint32_t> order;
    order.reserve(total_copies(requests));
    for (size_t i = 0; i < requests.size(); ++i) {
        order.insert(order.end(), requests[i].multiplicity, static_cast<uint32_t>(i));
    }
    Rng rng(seed);
    rng.shuffle(std::span<uint32_t>(order));
    return order;
}

Schedule assemble_schedule(const std::vector<MeasurementRequest> &requests, Relation relation, uint64_t seed,
                           std::vector<std::vector<size_t>> assignment, size_t num_shots,
                           std::string generator) {
    size_t n = common_length(requests);
    Schedule s;
    s.num_qubits = n;
    s.relation = relation;
    s.seed = seed;
    s.provenance.generator = std::move(generator);
    s.shots.resize(num_shots);
    for (auto &shot : s.shots) {
        if (relation == Relation::QubitWise) shot.basis = PauliString(n);
    }
    for (size_t i = 0; i < requests.size(); ++i) {
        s.observables.push_back(requests[i].observable);
        s.provenance.multiplicities.push_back(requests[i].multiplicity);
        std::sort(assignment[i].begin(), assignment[i].end());
        for (size_t shot : assignment[i]) {
            if (shot >= num_shots) throw std::out_of_range("Shot index out of range in assignment");
            s.shots[shot].members.push_back(i);
            if (relation == Relation::QubitWise) {
                const auto &obs = requests[i].observable;
                for (size_t q = 0; q < n; ++q) {
                    if (obs.get(q) != Pauli::I) s.shots[shot].basis.set(q, obs.get(q));
                }
            }
        }
    }
    if (relation == Relation::QubitWise) {
        for (auto &shot : s.shots) {
            for (size_t q = 0; q < n; ++q) {
                if (shot.basis.get(q) == Pauli::I) shot.basis.set(q, Pauli::Z);
            }
        }
    }
    s.assignment = std::move(assignment);
    return s;
}

Schedule greedy_partition(const std::vector<MeasurementRequest> &requests, Relation relation, uint64_t seed) {
    size_t n = common_length(requests);
    auto order = shuffled_copies(requests, seed);

    std::vector<std::vector<size_t>> words;
    words.reserve(requests.size());
    for (const auto &r : requests) words.push_back(active_words(r.observable));

    BasisTable bases((n + 63) / 64);
    std::vector<std::vector<uint32_t>> members;  // FullCommute only
    std::vector<uint64_t> stamp;
    std::vector<std::vector<size_t>> assignment(requests.size());

    uint64_t tick = 0;
    for (uint32_t i : order) {
        ++tick;
        for (size_t s : assignment[i]) stamp[s] = tick;
        const auto &obs = requests[i].observable;
        size_t chosen = stamp.size();
        for (size_t j = 0; j < stamp.size(); ++j) {
            if (stamp[j] == tick) continue;
            bool ok = true;
            if (relation == Relation::QubitWise) {
                ok = bases.accepts(j, obs, words[i]);
            } else {
                for (uint32_t other : members[j]) {
                    if (!fully_commutes(obs, requests[other].observable)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                chosen = j;
                break;
            }
        }
        if (chosen == stamp.size()) {
            stamp.push_back(0);
            if (relation == Relation::QubitWise) {
                bases.add_shot();
            } else {
                members.emplace_back();
            }
        }
        if (relation == Relation::QubitWise) {
            bases.place(chosen, obs, words[i]);
        } else {
            members[chosen].push_back(i);
        }
        assignment[i].push_back(chosen);
    }
    return assemble_schedule(requests, relation, seed, std::move(assignment), stamp.size(), "greedy");
}

Schedule greedy_partition_reference(const std::vector<MeasurementRequest> &requests, Relation relation,
                                    uint64_t seed, uint64_t max_copies) {
    common_length(requests);
    uint64_t total = total_copies(requests);
    if (total > max_copies) {
        throw std::length_error("Instance has " + std::to_string(total) +
                                " copies; the reference partition is limited to " + std::to_string(max_copies));
    }
    size_t m = requests.size();

    // Step 1: adjacency lists, each A_i containing i itself.
    std::vector<std::vector<size_t>> adjacency(m);
    for (size_t i = 0; i < m; ++i) {
        adjacency[i].push_back(i);
        for (size_t j = i + 1; j < m; ++j) {
            if (!compatible(relation, requests[i].observable, requests[j].observable)) {
                adjacency[j].push_back(i);
                adjacency[i].push_back(j);
            }
        }
    }

    // Step 2: greedy over the shuffled list of copies.
    std::vector<std::vector<size_t>> lists(m);
    size_t used = 0;
    for (uint32_t i : shuffled_copies(requests, seed)) {
        for (size_t j = 0; j < total; ++j) {
            bool taken = false;
            for (size_t k : adjacency[i]) {
                if (std::find(lists[k].begin(), lists[k].end(), j) != lists[k].end()) {
                    taken = true;
                    break;
                }
            }
            if (taken) continue;
            lists[i].push_back(j);
            used = std::max(used, j + 1);
            break;
        }
    }
    return assemble_schedule(requests, relation, seed, std::move(lists), used, "greedy-reference");
}

MultisetLowerBound multiset_lower_bound(uint64_t d1_lower, uint64_t w) {
    if (d1_lower < 1 || w < 1) throw std::invalid_argument("multiset_lower_bound needs d1 >= 1 and w >= 1");
    return {std::max(d1_lower, w), std::sqrt(static_cast<double>(w) * static_cast<double>(d1_lower))};
}

}  // namespace msched
