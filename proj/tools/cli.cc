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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "msched/baselines.h"
#include "msched/bounds.h"
#include "msched/io.h"
#include "msched/metrics.h"
#include "msched/pauli.h"
#include "msched/scheduler.h"
#include "msched/sweep.h"
#include "msched/verify.h"

namespace msched::cli {

namespace {

struct GenerateSpec {
    size_t n = 0;
    size_t k = 2;
    WeightMode mode = WeightMode::Exactly;
};

GenerateSpec parse_generate(const std::string &text) {
    GenerateSpec g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--generate expects key=value pairs, got '" + item + "'");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        if (key == "n") {
            g.n = std::stoul(value);
        } else if (key == "k") {
            g.k = std::stoul(value);
        } else if (key == "mode") {
            if (value == "exactly") {
                g.mode = WeightMode::Exactly;
            } else if (value == "up_to") {
                g.mode = WeightMode::UpTo;
            } else {
                throw std::invalid_argument("mode must be exactly|up_to");
            }
        } else {
            throw std::invalid_argument("unknown --generate key '" + key + "'");
        }
    }
    if (g.n == 0) throw std::invalid_argument("--generate needs n=N");
    return g;
}

std::vector<uint64_t> parse_list(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(std::stoull(item));
            continue;
        }
        uint64_t lo = std::stoull(item.substr(0, colon));
        uint64_t hi = std::stoull(item.substr(colon + 1));
        for (uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

void print_quality(std::ostream &out, const ScheduleQuality &q) {
    out << "total shots (all repeats): " << q.total_shots << "\n"
        << "avg SD ratio:              " << q.avg_sd_ratio << "\n"
        << "worst SD ratio:            " << q.worst_sd_ratio << "\n"
        << "shots per repetition:      " << q.shots_per_repetition
        << (q.uniform_multiplicity ? "" : " (divided by smallest multiplicity)") << "\n";
}

std::string report_json(const ValidationReport &report) {
    nlohmann::json doc;
    doc["valid"] = report.valid();
    doc["violations"] = nlohmann::json::array();
    for (const auto &v : report.violations) {
        nlohmann::json e;
        e["kind"] = to_string(v.kind);
        e["message"] = v.message;
        if (v.shot >= 0) e["shot"] = v.shot;
        if (v.observable >= 0) e["observable"] = v.observable;
        if (v.other >= 0) e["other"] = v.other;
        if (v.qubit >= 0) e["qubit"] = v.qubit + 1;
        doc["violations"].push_back(std::move(e));
    }
    return doc.dump(1) + "\n";
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

struct PartitionArgs {
    std::string input;
    std::string generate;
    double epsilon = 0.1;
    double delta = 0.1;
    std::string fraction = "1/50";
    uint64_t multiplicity = 0;
    std::string relation = "qwc";
    uint64_t seed = 0;
    uint64_t tries = 1;
    bool exact = false;
    int64_t budget_ms = 60000;
    uint64_t max_copies = 200;
    std::string out;
};

int cmd_partition(const PartitionArgs &a, std::ostream &out) {
    std::vector<PauliString> observables;
    std::vector<std::optional<uint64_t>> overrides;
    uint64_t d1_lower = 1;
    if (!a.input.empty() == !a.generate.empty()) {
        throw std::invalid_argument("give exactly one of --input or --generate");
    }
    if (!a.input.empty()) {
        auto file = read_observable_file(a.input);
        observables = std::move(file.observables);
        overrides = std::move(file.overrides);
    } else {
        auto g = parse_generate(a.generate);
        observables = enumerate_weight_k(g.n, g.k, g.mode);
        if (g.k >= 2 && g.n >= 2) d1_lower = simple_set_lower_bound(g.n);
    }

    AccuracySpec spec{a.epsilon, a.delta, parse_fraction(a.fraction)};
    spec.validate();
    std::vector<MeasurementRequest> requests;
    if (a.multiplicity > 0) {
        requests = uniform_requests(observables, a.multiplicity);
    } else {
        requests = build_multiset(observables, spec, overrides);
    }
    Relation relation = relation_from_name(a.relation);

    Schedule schedule;
    bool timed_out = false;
    std::string exact_note;
    if (a.exact) {
        ExactOptions options;
        options.budget_ms = a.budget_ms;
        options.max_copies = a.max_copies;
        auto result = exact_min_shots(requests, relation, options);
        schedule = std::move(result.schedule);
        timed_out = !result.optimal;
        exact_note = result.optimal ? "optimal" : "timeout; best incumbent, proven lower bound " +
                                                      std::to_string(result.lower_bound);
    } else {
        for (uint64_t t = 0; t < std::max<uint64_t>(1, a.tries); ++t) {
            auto candidate = greedy_partition(requests, relation, a.seed + t);
            if (t == 0 || candidate.shots.size() < schedule.shots.size()) schedule = std::move(candidate);
        }
    }
    bool all_overridden = !overrides.empty() && std::all_of(overrides.begin(), overrides.end(),
                                                            [](const auto &o) { return o.has_value(); });
    if (a.multiplicity == 0) {
        schedule.provenance.spec = spec;
        // Explicit multiplicities are final counts, not a fraction of the full target.
        schedule.provenance.repeats = all_overridden ? 1 : ceil_count(1.0 / spec.fraction);
    }

    auto report = validate_schedule(schedule, requests, relation);
    if (!report.valid()) {
        out << report_json(report);
        return kValidationFailure;
    }
    if (!a.out.empty()) write_schedule(schedule, a.out);

    uint64_t max_w = 0;
    for (const auto &r : requests) max_w = std::max(max_w, r.multiplicity);
    auto lb = multiset_lower_bound(d1_lower, max_w);
    out << "observables: " << requests.size() << " on n=" << schedule.num_qubits << " qubits, "
        << total_copies(requests) << " copies, relation " << relation_name(relation) << "\n"
        << "shots: " << schedule.shots.size() << (a.exact ? " (" + exact_note + ")" : "") << "\n"
        << "lower bounds: max(d1, w) = " << lb.bound << ", sqrt(w d1) = " << lb.geometric << "\n"
        << "repeats to full accuracy: " << schedule.provenance.repeats << "\n";
    print_quality(out, schedule_quality(schedule, requests, schedule.provenance.repeats));
    return timed_out ? kTimeout : kOk;
}

struct BaselineArgs {
    std::string kind;
    size_t n = 0;
    uint64_t d = 0;
    uint64_t seed = 0;
    size_t k = 2;
    std::string out;
};

int cmd_baseline(const BaselineArgs &a, std::ostream &out) {
    Schedule schedule;
    if (a.kind == "qot") {
        auto family = qot_family(a.n);
        schedule = schedule_from_bases(family.shots, enumerate_weight_k(a.n, 2, WeightMode::Exactly), "qot");
    } else if (a.kind == "binary-cover") {
        auto cover = binary_cover(a.n);
        std::vector<PauliString> bases;
        for (size_t r = 0; r < cover.rows.size(); ++r) bases.push_back(cover.basis(r));
        schedule = schedule_from_bases(bases, zx_pairs(a.n), "binary-cover");
        for (size_t r = 0; r < cover.rows.size(); ++r) out << cover.row_string(r) << "\n";
    } else if (a.kind == "random") {
        auto bases = random_pauli_scheme(a.n, a.d, a.seed);
        schedule = schedule_from_bases(bases, enumerate_weight_k(a.n, std::min(a.k, a.n), WeightMode::Exactly),
                                       "random", a.seed);
    } else {
        throw std::invalid_argument("unknown baseline '" + a.kind + "' (expected qot|binary-cover|random)");
    }
    if (!a.out.empty()) write_schedule(schedule, a.out);
    out << a.kind << " n=" << a.n << ": " << schedule.shots.size() << " shots, " << schedule.observables.size()
        << " target observables covered, " << schedule.provenance.uncovered << " uncovered\n";
    return kOk;
}

int cmd_verify(const std::string &path, std::ostream &out) {
    auto schedule = read_schedule(path);
    auto report = validate_schedule(schedule);
    out << report_json(report);
    return report.valid() ? kOk : kValidationFailure;
}

int cmd_metrics(const std::string &path, uint64_t repeats, bool mixed, const std::string &counts,
                std::ostream &out) {
    auto schedule = read_schedule(path);
    auto requests = requests_of(schedule);
    auto report = validate_schedule(schedule, requests, schedule.relation);
    if (!report.valid()) {
        out << report_json(report);
        return kValidationFailure;
    }
    CountMode mode;
    if (counts == "coverage") {
        mode = CountMode::Coverage;
    } else if (counts == "assigned") {
        mode = CountMode::Assigned;
    } else {
        throw std::invalid_argument("--counts must be coverage|assigned");
    }
    uint64_t r = repeats ? repeats : schedule.provenance.repeats;
    auto q = schedule_quality(schedule, requests, r, mixed ? StateAverage::Mixed : StateAverage::Pure, mode);
    out << "generator,n,shots,repeats,total_shots,avg_sd_ratio,worst_sd_ratio,shots_per_repetition,"
           "uniform_multiplicity\n";
    out << std::setprecision(10) << schedule.provenance.generator << "," << schedule.num_qubits << ","
        << schedule.shots.size() << "," << r << "," << q.total_shots << "," << q.avg_sd_ratio << ","
        << q.worst_sd_ratio << "," << q.shots_per_repetition << "," << (q.uniform_multiplicity ? 1 : 0) << "\n";
    return kOk;
}

void bound_line(std::ostream &out, const std::string &name, double value, std::optional<uint64_t> ceiling) {
    out << std::left << std::setw(44) << name << std::right << std::setw(18) << std::setprecision(10) << value;
    if (ceiling) out << std::setw(12) << *ceiling;
    out << "\n";
}

int cmd_bounds(size_t n, size_t k, double epsilon, double delta, const std::string &mode_name, std::ostream &out) {
    if (n < 2 || k < 1 || k > n) throw std::invalid_argument("bounds needs n >= 2 and 1 <= k <= n");
    WeightMode mode = mode_name == "up_to" ? WeightMode::UpTo : WeightMode::Exactly;
    if (mode_name != "up_to" && mode_name != "exactly") throw std::invalid_argument("--mode must be exactly|up_to");
    uint64_t m = enumerate_weight_k(n, k, mode).size();
    AccuracySpec spec{epsilon, delta, 1.0};
    spec.validate();

    out << "n=" << n << " k=" << k << " m=" << m << " epsilon=" << epsilon << " delta=" << delta << "\n";
    out << std::left << std::setw(44) << "bound" << std::right << std::setw(18) << "value" << std::setw(12) << "ceiling"
        << "\n";
    uint64_t w = required_repetitions(spec, m);
    bound_line(out, "repetitions per observable", 2 * std::log(2.0 * m / delta) / (epsilon * epsilon), w);
    auto hs = hoeffding_samples(epsilon, delta / static_cast<double>(m), 2.0);
    bound_line(out, "hoeffding samples (range 2, delta/m)", hs.value, hs.ceiling);
    bound_line(out, "simple-set lower bound ceil(log2 n)", static_cast<double>(simple_set_lower_bound(n)),
               std::nullopt);
    auto ref = reference_partition_size(n);
    bound_line(out, "reference partition 6 ceil(log3 n) + 3", static_cast<double>(ref.size), std::nullopt);
    bound_line(out, "reference band 6 log3 n + 3", ref.band_low, std::nullopt);
    bound_line(out, "reference band 6 log3 n + 9", ref.band_high, std::nullopt);
    auto lb = multiset_lower_bound(simple_set_lower_bound(n), w);
    bound_line(out, "multiset lower bound max(d1, w)", static_cast<double>(lb.bound), std::nullopt);
    bound_line(out, "multiset lower bound sqrt(w d1)", lb.geometric, std::nullopt);
    bound_line(out, "repeated simple partition d1 * w", static_cast<double>(simple_set_lower_bound(n) * w),
               std::nullopt);
    if (m >= 2) {
        auto rs = random_required_shots(std::pow(3.0, -static_cast<double>(k)), w, m);
        bound_line(out, "random shots for w hits (2pw + ln m)/p^2", rs.value, rs.ceiling);
    }
    auto ru = random_upper_bound(k, m, epsilon, delta);
    bound_line(out, "random upper bound 8 3^(k-1) ln(2m/d)/e^2", ru.improved.value, ru.improved.ceiling);
    bound_line(out, "random upper bound 68 3^k ln(2m/d)/e^2", ru.prior.value, ru.prior.ceiling);
    if (n >= 3) {
        double a = static_cast<double>(w) / std::log(static_cast<double>(n));
        bound_line(out, "multiset existence 2(3^k a + 3^2k k) ln n", multiset_existence_bound(k, a, n),
                   std::nullopt);
    }
    auto td = trace_distance_bounds(k, epsilon);
    bound_line(out, "trace distance lower 2^(-k/2) eps", td.lower, std::nullopt);
    bound_line(out, "trace distance upper 4^k eps", td.upper, std::nullopt);
    return kOk;
}

}  // namespace

double parse_fraction(const std::string &text) {
    auto slash = text.find('/');
    double value = 0;
    try {
        if (slash == std::string::npos) {
            value = std::stod(text);
        } else {
            value = std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
        }
    } catch (const std::logic_error &) {
        throw std::invalid_argument("invalid fraction '" + text + "'");
    }
    if (!(value > 0) || value > 1) throw std::invalid_argument("fraction must lie in (0, 1], got '" + text + "'");
    return value;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Measurement schedule optimizer for multisets of Pauli observables", "msched"};
    app.require_subcommand(1);

    PartitionArgs pa;
    auto *partition = app.add_subcommand("partition", "Partition an observable multiset into shots");
    partition->add_option("--input", pa.input, "Observable file");
    partition->add_option("--generate", pa.generate, "All weight-k strings: n=N,k=K,mode=exactly|up_to");
    partition->add_option("--epsilon", pa.epsilon, "Per-observable error")->capture_default_str();
    partition->add_option("--delta", pa.delta, "Total failure probability")->capture_default_str();
    partition->add_option("--fraction", pa.fraction, "Fraction of repetitions in the multiset")->capture_default_str();
    partition->add_option("--multiplicity", pa.multiplicity, "Uniform multiplicity (ignores epsilon/delta/fraction)");
    partition->add_option("--relation", pa.relation, "qwc|commute")->capture_default_str();
    partition->add_option("--seed", pa.seed, "Shuffle seed")->capture_default_str();
    partition->add_option("--tries", pa.tries, "Keep the best of this many consecutive seeds")->capture_default_str();
    partition->add_flag("--exact", pa.exact, "Exact minimum (small instances)");
    partition->add_option("--budget-ms", pa.budget_ms, "Exact solver time budget")->capture_default_str();
    partition->add_option("--max-copies", pa.max_copies, "Exact solver size guard")->capture_default_str();
    partition->add_option("--out", pa.out, "Schedule output file");

    BaselineArgs ba;
    auto *baseline = app.add_subcommand("baseline", "Write a comparison shot family as a schedule");
    baseline->add_option("kind", ba.kind, "qot|binary-cover|random")->required();
    baseline->add_option("--n", ba.n, "Qubits")->required();
    baseline->add_option("--d", ba.d, "Shots (random)");
    baseline->add_option("--seed", ba.seed, "Seed (random)");
    baseline->add_option("--k", ba.k, "Target weight (random)")->capture_default_str();
    baseline->add_option("--out", ba.out, "Schedule output file");

    std::string verify_path;
    auto *verify = app.add_subcommand("verify", "Validate a schedule file");
    verify->add_option("schedule", verify_path, "Schedule file")->required();

    std::string metrics_path;
    uint64_t metrics_repeats = 0;
    bool metrics_mixed = false;
    std::string metrics_counts = "coverage";
    auto *metrics = app.add_subcommand("metrics", "Schedule quality as one CSV row");
    metrics->add_option("schedule", metrics_path, "Schedule file")->required();
    metrics->add_option("--repeats", metrics_repeats, "Repeat count (default: from file)");
    metrics->add_flag("--mixed", metrics_mixed, "Average SDs over mixed states");
    metrics->add_option("--counts", metrics_counts, "coverage|assigned")->capture_default_str();

    SweepOptions so;
    std::string sweep_ns;
    std::string sweep_seeds = "0";
    std::string sweep_fraction = "1/50";
    std::string sweep_mode = "exactly";
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "CSV rows for a named sweep");
    sweep->add_option("name", so.name, "fig3|figS1|figS2|figS3")->required();
    sweep->add_option("--n", sweep_ns, "Qubit counts, e.g. 4,8,16 or 8:12")->required();
    sweep->add_option("--seeds", sweep_seeds, "Seeds, e.g. 0:19")->capture_default_str();
    sweep->add_option("--epsilon", so.spec.epsilon)->capture_default_str();
    sweep->add_option("--delta", so.spec.delta)->capture_default_str();
    sweep->add_option("--fraction", sweep_fraction)->capture_default_str();
    sweep->add_option("--mode", sweep_mode, "exactly|up_to")->capture_default_str();
    sweep->add_option("--repetitions", so.max_repetitions, "figS1: largest repetition count")->capture_default_str();
    sweep->add_option("--threads", so.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

    size_t bn = 0;
    size_t bk = 2;
    double beps = 0.1;
    double bdelta = 0.1;
    std::string bmode = "exactly";
    auto *bounds = app.add_subcommand("bounds", "Table of closed-form bounds");
    bounds->add_option("--n", bn, "Qubits")->required();
    bounds->add_option("--k", bk)->capture_default_str();
    bounds->add_option("--epsilon", beps)->capture_default_str();
    bounds->add_option("--delta", bdelta)->capture_default_str();
    bounds->add_option("--mode", bmode, "exactly|up_to")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*partition) return cmd_partition(pa, out);
        if (*baseline) return cmd_baseline(ba, out);
        if (*verify) return cmd_verify(verify_path, out);
        if (*metrics) return cmd_metrics(metrics_path, metrics_repeats, metrics_mixed, metrics_counts, out);
        if (*sweep) {
            so.ns = parse_list(sweep_ns);
            so.seeds = parse_list(sweep_seeds);
            so.spec.fraction = parse_fraction(sweep_fraction);
            so.mode = sweep_mode == "up_to" ? WeightMode::UpTo : WeightMode::Exactly;
            write_text(sweep_out, to_csv(run_sweep(so)), out);
            return kOk;
        }
        if (*bounds) return cmd_bounds(bn, bk, beps, bdelta, bmode, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace msched::cli
