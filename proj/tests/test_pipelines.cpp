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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "covgraph/constructions.hpp"
#include "covgraph/error.hpp"
#include "covgraph/io.hpp"
#include "covgraph/pipelines.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using covgraph::ComplexMatrix;
using covgraph::Json;
using covgraph::Report;

namespace {

constexpr double kPi = std::numbers::pi;

const covgraph::Assertion* find(const Report& r, const std::string& name) {
  for (const auto& a : r.assertions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::string dump(const ComplexMatrix& m) { return covgraph::canonical_dump(covgraph::matrix_to_json(m)); }

covgraph::VerifyInputs two_block_inputs(const ComplexMatrix& candidate) {
  oracle::Random rng(199);
  return {covgraph::canonical_dump(covgraph::rep_to_json(fixture::two_block_rep())),
          dump(fixture::hermitian_seed(rng, 0.5)), dump(candidate), std::nullopt, false};
}

}  // namespace

TEST_CASE("demo4 at the balanced point") {
  const Report r = covgraph::run_demo4({0.35355339, 0.0, 0.0, 0.0, 0});
  CHECK(r.passed());
  CHECK(r.exit_code() == 0);
  const auto* ent = find(r, "printed_entanglement");
  REQUIRE(ent != nullptr);
  CHECK(std::abs(ent->details["printed_entropy_bits"].get<double>() - 1.0) <= 1e-9);
  REQUIRE(r.schmidt.has_value());
  CHECK(r.constants.has_value());
}

TEST_CASE("demo4 boundary and generic cases") {
  const Report zero = covgraph::run_demo4({0.0, 0.0, 0.0, 0.0, 0});
  CHECK(zero.passed());
  CHECK((*zero.schmidt)["boundary"] == true);
  CHECK(find(zero, "q_projection")->passed);

  const Report quarter = covgraph::run_demo4({0.25, 0.3, -1.0, 2.0, 1});
  CHECK(quarter.passed());
  CHECK(find(quarter, "graph_dimension")->details["dimension"] == 3);

  CHECK_THROWS_AS(covgraph::run_demo4({0.6, 0.0, 0.0, 0.0, 0}), covgraph::InputError);
}

TEST_CASE("bell command") {
  const Report r = covgraph::run_bell(2, 1);
  CHECK(r.passed());
  CHECK(find(r, "anticlique_P_1") != nullptr);
  CHECK(find(r, "anticlique_P_2") != nullptr);
  CHECK(find(r, "pinch_identity")->residual <= 1e-12);
  CHECK(covgraph::run_bell(5, 5).passed());
  CHECK_THROWS_AS(covgraph::run_bell(1, 1), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::run_bell(3, 4), covgraph::InputError);
}

TEST_CASE("verify command outcomes") {
  auto pass = two_block_inputs(covgraph::two_block_p_plus());
  pass.samples = 5;
  const Report ok = covgraph::run_verify(pass);
  CHECK(ok.passed());
  REQUIRE(find(ok, "sampled_matches_analytic") != nullptr);
  CHECK(find(ok, "sampled_matches_analytic")->passed);

  const Report rank_one = covgraph::run_verify(two_block_inputs(oracle::outer(ComplexMatrix::basis_vector(4, 0))));
  CHECK(rank_one.exit_code() == 1);
  CHECK(find(rank_one, "anticlique")->details["reason"] == "code_dimension < 2");

  auto incomplete = two_block_inputs(covgraph::two_block_p_plus());
  const ComplexMatrix id = oracle::eye(4);
  incomplete.rep_json = covgraph::canonical_dump(
      Json{{"dim", 4}, {"freqs", {1, -1}}, {"projections", {covgraph::matrix_to_json(id), covgraph::matrix_to_json(id)}}});
  try {
    covgraph::run_verify(incomplete);
    FAIL("expected an input error");
  } catch (const covgraph::InputError& e) {
    CHECK(std::string(e.what()).find("violation") != std::string::npos);
  }

  auto malformed = two_block_inputs(covgraph::two_block_p_plus());
  malformed.seed_json = "{not json";
  CHECK_THROWS_AS(covgraph::run_verify(malformed), covgraph::InputError);

  auto not_projection = two_block_inputs(2.0 * oracle::eye(4));
  CHECK_THROWS_AS(covgraph::run_verify(not_projection), covgraph::InputError);

  auto negative = two_block_inputs(covgraph::two_block_p_plus());
  negative.seed_json = dump(-1.0 * oracle::eye(4));
  CHECK_THROWS_AS(covgraph::run_verify(negative), covgraph::InputError);
  negative.allow_general_seed = true;
  CHECK(covgraph::run_verify(negative).passed());
}

TEST_CASE("scan command") {
  const std::vector<double> grid{0.1, 0.2, 0.3, 0.4};
  const Report r = covgraph::run_scan(grid, 7);
  CHECK(r.passed());
  CHECK(r.assertions.size() == 4);
  CHECK((*r.summary)["rows"] == 4);
  CHECK((*r.summary)["passed_rows"] == 4);
  for (const auto& a : r.assertions) {
    CHECK(a.details["anticlique_P_plus"] == true);
    CHECK(a.details["anticlique_P_minus"] == true);
  }

  const std::vector<double> balanced{1.0 / (2.0 * std::sqrt(2.0))};
  const Report m = covgraph::run_scan(balanced, 7);
  CHECK((*m.summary)["max_entropy_rows"] == Json::array({0}));

  CHECK_THROWS_AS(covgraph::run_scan(std::vector<double>{}, 1), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::run_scan(std::vector<double>{0.7}, 1), covgraph::InputError);
}

TEST_CASE("scan output does not depend on the worker count") {
  const std::vector<double> grid = covgraph::parse_grid("0:0.5:9");
  const std::string one = covgraph::canonical_dump(covgraph::run_scan(grid, 42, {}, 1).to_json());
  const std::string four = covgraph::canonical_dump(covgraph::run_scan(grid, 42, {}, 4).to_json());
  CHECK(one == four);
  const std::string other = covgraph::canonical_dump(covgraph::run_scan(grid, 43, {}, 2).to_json());
  CHECK(one != other);
}

TEST_CASE("tolerance resolution") {
  CHECK(covgraph::resolve_tolerance(std::nullopt, std::nullopt).eq_tol == 1e-10);
  CHECK(covgraph::resolve_tolerance("1e-8", std::nullopt).eq_tol == 1e-8);
  CHECK(covgraph::resolve_tolerance("1e-8", 1e-6).eq_tol == 1e-6);
  CHECK(covgraph::resolve_tolerance("", std::nullopt).eq_tol == 1e-10);
  const auto small = covgraph::resolve_tolerance(std::nullopt, 1e-13);
  CHECK(small.eig_tol <= small.eq_tol);
  CHECK_THROWS_AS(covgraph::resolve_tolerance("abc", std::nullopt), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::resolve_tolerance(std::nullopt, -1.0), covgraph::InputError);
}

TEST_CASE("angle and grid parsing") {
  CHECK(covgraph::parse_angle("0.5") == 0.5);
  CHECK(covgraph::parse_angle("pi") == kPi);
  CHECK(covgraph::parse_angle("-pi/2") == -kPi / 2);
  CHECK(covgraph::parse_angle("2pi") == 2 * kPi);
  CHECK(covgraph::parse_angle("3*pi/4") == doctest::Approx(3 * kPi / 4));
  CHECK_THROWS_AS(covgraph::parse_angle("pie"), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::parse_angle("pi/0"), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::parse_angle(""), covgraph::InputError);

  CHECK(covgraph::parse_grid("0.1, 0.2,0.3") == std::vector<double>{0.1, 0.2, 0.3});
  const auto range = covgraph::parse_grid("0:1:5");
  REQUIRE(range.size() == 5);
  CHECK(range[2] == 0.5);
  CHECK(covgraph::parse_grid("").empty());
  CHECK_THROWS_AS(covgraph::parse_grid("0.1,,0.2"), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::parse_grid("0:1"), covgraph::InputError);
  CHECK_THROWS_AS(covgraph::parse_grid("0:1:2.5"), covgraph::InputError);
}
