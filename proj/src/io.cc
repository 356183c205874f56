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

#include "msched/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msched {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct RawLine {
    size_t line_no = 0;
    std::string body;                 // observable text without suffixes
    std::optional<uint64_t> weight;
    bool sparse = false;
    std::optional<size_t> explicit_n;
    size_t max_index = 0;
};

bool looks_dense(std::string_view body) {
    return std::all_of(body.begin(), body.end(), [](char c) {
        return std::string_view("IXYZixyz").find(c) != std::string_view::npos;
    });
}

}  // namespace

bool ObservableFile::has_overrides() const {
    return std::any_of(overrides.begin(), overrides.end(), [](const auto &o) { return o.has_value(); });
}

ObservableFile parse_observable_file(std::istream &in) {
    std::vector<RawLine> lines;
    std::string text;
    size_t line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        std::string_view view(text);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;

        auto fail = [&](const std::string &what) {
            return std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
        };

        RawLine raw;
        raw.line_no = line_no;
        if (auto star = view.find('*'); star != std::string_view::npos) {
            auto w_text = trim(view.substr(star + 1));
            uint64_t w = 0;
            auto [ptr, ec] = std::from_chars(w_text.data(), w_text.data() + w_text.size(), w);
            if (ec != std::errc() || ptr != w_text.data() + w_text.size() || w < 1) {
                throw fail("invalid multiplicity '" + std::string(w_text) + "'");
            }
            raw.weight = w;
            view = trim(view.substr(0, star));
        }
        std::string_view body = view;
        if (auto at = view.find('@'); at != std::string_view::npos) {
            body = trim(view.substr(0, at));
            try {
                raw.explicit_n = parse_pauli(view).num_qubits();
            } catch (const std::exception &e) {
                throw fail(e.what());
            }
            raw.sparse = true;
        } else if (!looks_dense(body) || body.find_first_of("0123456789") != std::string_view::npos) {
            raw.sparse = true;
        }
        if (body.empty()) throw fail("missing observable");
        raw.body = std::string(body);
        if (raw.sparse) {
            // Scan 1-based indices to infer n when no line fixes it.
            std::istringstream terms(raw.body);
            std::string term;
            while (terms >> term) {
                size_t idx = 0;
                auto [ptr, ec] = std::from_chars(term.data() + 1, term.data() + term.size(), idx);
                if (term.size() < 2 || ec != std::errc() || ptr != term.data() + term.size()) {
                    throw fail("invalid sparse term '" + term + "'");
                }
                raw.max_index = std::max(raw.max_index, idx);
            }
        }
        lines.push_back(std::move(raw));
    }
    if (lines.empty()) throw std::invalid_argument("observable file contains no observables");

    std::optional<size_t> n;
    for (const auto &raw : lines) {
        std::optional<size_t> implied = raw.sparse ? raw.explicit_n : std::optional<size_t>(raw.body.size());
        if (!implied) continue;
        if (n && *n != *implied) {
            throw std::invalid_argument("line " + std::to_string(raw.line_no) + ": implies n=" +
                                        std::to_string(*implied) + " but earlier lines imply n=" +
                                        std::to_string(*n));
        }
        n = implied;
    }
    if (!n) {
        size_t widest = 0;
        for (const auto &raw : lines) widest = std::max(widest, raw.max_index);
        n = widest;
    }

    ObservableFile file;
    file.num_qubits = *n;
    for (const auto &raw : lines) {
        try {
            std::string text_form = raw.sparse ? raw.body + " @ n=" + std::to_string(*n) : raw.body;
            file.observables.push_back(parse_pauli(text_form));
        } catch (const std::exception &e) {
            throw std::invalid_argument("line " + std::to_string(raw.line_no) + ": " + e.what());
        }
        file.overrides.push_back(raw.weight);
    }
    return file;
}

ObservableFile read_observable_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open observable file '" + path + "'");
    return parse_observable_file(in);
}

std::string format_observable_file(const ObservableFile &file) {
    std::string out;
    for (size_t i = 0; i < file.observables.size(); ++i) {
        out += file.observables[i].str();
        if (i < file.overrides.size() && file.overrides[i]) out += " * " + std::to_string(*file.overrides[i]);
        out += '\n';
    }
    return out;
}

std::string schedule_to_json(const Schedule &schedule, int indent) {
    json doc;
    doc["version"] = kScheduleFormatVersion;
    doc["n"] = schedule.num_qubits;
    doc["relation"] = relation_name(schedule.relation);
    doc["seed"] = schedule.seed;
    doc["unassigned_basis"] = schedule.relation == Relation::QubitWise ? json("Z") : json(nullptr);

    json observables = json::array();
    for (const auto &o : schedule.observables) observables.push_back(o.str());
    doc["observables"] = std::move(observables);

    json shots = json::array();
    for (const auto &shot : schedule.shots) {
        json entry;
        entry["basis"] = shot.basis.num_qubits() ? json(shot.basis.str()) : json(nullptr);
        entry["members"] = shot.members;
        shots.push_back(std::move(entry));
    }
    doc["shots"] = std::move(shots);
    doc["assignment"] = schedule.assignment;

    const auto &p = schedule.provenance;
    json prov;
    prov["generator"] = p.generator;
    if (p.spec) {
        prov["spec"] = {{"epsilon", p.spec->epsilon}, {"delta", p.spec->delta}};
        prov["fraction"] = p.spec->fraction;
    } else {
        prov["spec"] = nullptr;
        prov["fraction"] = nullptr;
    }
    prov["multiplicities"] = p.multiplicities;
    prov["repeats"] = p.repeats;
    prov["uncovered"] = p.uncovered;
    doc["provenance"] = std::move(prov);
    return doc.dump(indent) + "\n";
}

Schedule schedule_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("schedule is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("version").get<int>() != kScheduleFormatVersion) {
            throw std::invalid_argument("unsupported schedule version " + doc.at("version").dump());
        }
        Schedule s;
        s.num_qubits = doc.at("n").get<size_t>();
        s.relation = relation_from_name(doc.at("relation").get<std::string>());
        s.seed = doc.at("seed").get<uint64_t>();
        for (const auto &o : doc.at("observables")) {
            auto p = PauliString::from_dense(o.get<std::string>());
            if (p.num_qubits() != s.num_qubits) throw std::invalid_argument("observable length differs from n");
            s.observables.push_back(std::move(p));
        }
        for (const auto &entry : doc.at("shots")) {
            Shot shot;
            if (!entry.at("basis").is_null()) shot.basis = PauliString::from_dense(entry.at("basis").get<std::string>());
            shot.members = entry.at("members").get<std::vector<size_t>>();
            s.shots.push_back(std::move(shot));
        }
        s.assignment = doc.at("assignment").get<std::vector<std::vector<size_t>>>();
        const auto &prov = doc.at("provenance");
        s.provenance.generator = prov.at("generator").get<std::string>();
        if (!prov.at("spec").is_null()) {
            AccuracySpec spec;
            spec.epsilon = prov.at("spec").at("epsilon").get<double>();
            spec.delta = prov.at("spec").at("delta").get<double>();
            spec.fraction = prov.at("fraction").get<double>();
            s.provenance.spec = spec;
        }
        s.provenance.multiplicities = prov.at("multiplicities").get<std::vector<uint64_t>>();
        s.provenance.repeats = prov.value("repeats", uint64_t{1});
        s.provenance.uncovered = prov.value("uncovered", uint64_t{0});
        if (s.provenance.multiplicities.size() != s.observables.size()) {
            throw std::invalid_argument("multiplicities length differs from observables");
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule: ") + e.what());
    }
}

void write_schedule(const Schedule &schedule, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << schedule_to_json(schedule);
}

Schedule read_schedule(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return schedule_from_json(buf.str());
}

}  // namespace msched
