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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msched/pauli.h"
#include "msched/scheduler.h"

namespace msched {

/// Contents of an observable file: one observable per line, dense ("XIZY") or
/// sparse ("X1 Z3", optionally "@ n=4"), optional "* w" multiplicity suffix,
/// "#" comments and blank lines ignored.
struct ObservableFile {
    size_t num_qubits = 0;
    std::vector<PauliString> observables;
    std::vector<std::optional<uint64_t>> overrides;

    bool has_overrides() const;
};

/// Throws std::invalid_argument with a "line N:" prefix on bad input.
ObservableFile parse_observable_file(std::istream &in);
ObservableFile read_observable_file(const std::string &path);

/// Canonical text: dense observables, "* w" where overridden.
std::string format_observable_file(const ObservableFile &file);

constexpr int kScheduleFormatVersion = 1;

/// JSON schedule document (see README for the field list).
std::string schedule_to_json(const Schedule &schedule, int indent = 1);
Schedule schedule_from_json(const std::string &text);

void write_schedule(const Schedule &schedule, const std::string &path);
Schedule read_schedule(const std::string &path);

}  // namespace msched
