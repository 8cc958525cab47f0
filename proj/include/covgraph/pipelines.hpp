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

// End-to-end verification commands behind the CLI. Each returns a Report;
// malformed input raises InputError (or another covgraph::Error), which the
// front ends map to exit status 2.

#ifndef COVGRAPH_PIPELINES_HPP
#define COVGRAPH_PIPELINES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covgraph/constructions.hpp"
#include "covgraph/report.hpp"

namespace covgraph {

/// Builds Q(params), its graph under the two-block representation, checks
/// the operator-system axioms, certifies P+ and P- and reports entanglement.
Report run_demo4(const QParams& params, const Tolerance& tol = {});

/// Pinching identity, graph axioms and anticliques for the Bell seed Q_j.
Report run_bell(std::size_t d, std::size_t j, const Tolerance& tol = {});

struct VerifyInputs {
  std::string rep_json;
  std::string seed_json;
  std::string projection_json;
  std::optional<std::size_t> samples;
  bool allow_general_seed = false;
};

/// Certifies a user-supplied projection against the graph generated by a
/// user-supplied representation and seed.
Report run_verify(const VerifyInputs& inputs, const Tolerance& tol = {});

/// Sweeps the projection family over tau values with seeded random angles.
/// Rows are computed on up to `workers` threads (0 = hardware concurrency)
/// and assembled in grid order.
Report run_scan(std::span<const double> taus, std::uint64_t seed, const Tolerance& tol = {},
                unsigned workers = 0);

/// eq_tol from the flag if given, else from the environment value, else the
/// default. eig_tol is lowered to eq_tol when needed.
Tolerance resolve_tolerance(std::optional<std::string_view> env_value, std::optional<double> flag);

/// Radians, accepting pi literals: "pi", "-pi/2", "2pi", "3*pi/4", "0.25".
double parse_angle(std::string_view text);

/// Comma-separated items, each a number or "lo:hi:count" (inclusive linspace).
std::vector<double> parse_grid(std::string_view spec);

}  // namespace covgraph

#endif  // COVGRAPH_PIPELINES_HPP
