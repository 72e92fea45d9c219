// Copyright 2026 The diagdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diagdiff::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kTypeError = 3,
  kMissingRule = 4,
};

enum class Format { json, csv };

struct RunConfig {
  std::string command;
  std::string input;
  std::map<std::size_t, double> theta;
  std::size_t param = 0;
  double h = 1e-5;
  std::optional<double> tol;
  double exact_tol = 1e-10;
  std::string rules;   // optional rule file
  std::string output;  // empty: standard output
  Format format = Format::json;
};

/// Parses "i=v,j=w" into an index → value map. Throws ParseError.
std::map<std::size_t, double> parse_theta(const std::string& text);

/// Runs one command; never throws. Diagnostics go to `err`, results to the
/// output file or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. argv[0] is the program name.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diagdiff::cli
