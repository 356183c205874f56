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

#include <iosfwd>
#include <string>
#include <vector>

namespace msched::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kValidationFailure = 2, kTimeout = 3 };

/// Entry point shared by the msched binary and the CLI tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "0.02" or "1/50".
double parse_fraction(const std::string &text);

}  // namespace msched::cli
