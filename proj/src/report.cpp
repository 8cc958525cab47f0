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

#include "covgraph/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace covgraph {

bool Report::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.passed; });
}

Json Report::to_json() const {
  Json doc{{"command", command}, {"inputs", inputs}, {"version", kReportSchema}};
  Json list = Json::array();
  for (const auto& a : assertions) {
    list.push_back(
        {{"name", a.name}, {"passed", a.passed}, {"residual", a.residual}, {"details", a.details}});
  }
  doc["assertions"] = std::move(list);
  doc["passed"] = passed();
  doc["exit_code"] = exit_code();
  if (constants) {
    Json c = Json::array();
    for (Complex z : *constants) c.push_back(complex_to_json(z));
    doc["constants"] = std::move(c);
  }
  if (schmidt) doc["schmidt"] = *schmidt;
  if (summary) doc["summary"] = *summary;
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "covgraph " << command << " (" << kReportSchema << ")\n";
  if (!inputs.empty()) {
    os << "inputs:";
    for (const auto& [key, value] : inputs.items()) os << ' ' << key << '=' << canonical_dump(value);
    os << '\n';
  }
  for (const auto& a : assertions) {
    char residual[32];
    std::snprintf(residual, sizeof residual, "%.3e", a.residual);
    os << (a.passed ? "  [PASS] " : "  [FAIL] ") << a.name << "  residual=" << residual;
    if (!a.details.empty()) os << "  " << canonical_dump(a.details);
    os << '\n';
  }
  if (constants) {
    os << "constants:";
    for (Complex z : *constants) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (%.6g%+.6gi)", z.real(), z.imag());
      os << buf;
    }
    os << '\n';
  }
  if (schmidt) os << "schmidt: " << canonical_dump(*schmidt) << '\n';
  if (summary) os << "summary: " << canonical_dump(*summary) << '\n';
  os << "result: " << (passed() ? "PASS" : "FAIL") << " (exit " << exit_code() << ")\n";
  return os.str();
}

}  // namespace covgraph
