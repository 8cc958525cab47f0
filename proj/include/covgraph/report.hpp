// Copyright 2026 The covgraph Authors
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

#ifndef COVGRAPH_REPORT_HPP
#define COVGRAPH_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "covgraph/io.hpp"
#include "covgraph/matrix.hpp"

namespace covgraph {

inline constexpr const char* kReportSchema = "covgraph-report/1";

struct Assertion {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  Json details = Json::object();
};

/// Machine-readable outcome of a command. The exit status is 0 when every
/// assertion holds and 1 otherwise; input errors never produce a report.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Assertion> assertions;
  std::optional<std::vector<Complex>> constants;
  std::optional<Json> schmidt;
  std::optional<Json> summary;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  Json to_json() const;
  /// Human-readable rendering carrying the same assertion names.
  std::string to_text() const;
};

}  // namespace covgraph

#endif  // COVGRAPH_REPORT_HPP
