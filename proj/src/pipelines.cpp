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

#include "covgraph/pipelines.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "covgraph/anticlique.hpp"
#include "covgraph/error.hpp"
#include "covgraph/graph.hpp"
#include "covgraph/linalg.hpp"

namespace covgraph {

namespace {

constexpr double kPi = std::numbers::pi;
// Agreement required between analytic and sampled orbit spans.
constexpr double kSubspaceTol = 1e-8;
// Printed-formula entropy must equal one bit this closely at the maximal point.
constexpr double kMaxEntropyTol = 1e-9;
// tau values this close to 1/(2 sqrt 2) are held to the maximal-entanglement claim.
constexpr double kMaxTauWindow = 1e-6;

Json constants_json(const std::vector<Complex>& constants) {
  Json out = Json::array();
  for (Complex z : constants) out.push_back(complex_to_json(z));
  return out;
}

Json params_json(const QParams& p) {
  return Json{{"tau", p.tau}, {"z1", p.z1}, {"z2", p.z2}, {"z3", p.z3()}, {"z4", p.z4}, {"k", p.k}};
}

Json entanglement_json(const EntanglementReport& report) {
  Json vectors = Json::array();
  for (const auto& v : report.vectors) {
    Json item{{"name", v.name},
              {"coefficients", v.coefficients},
              {"entropy_bits", v.entropy_bits},
              {"discrepancy", v.discrepancy}};
    if (v.printed_weights) {
      item["printed_weights"] = Json::array({(*v.printed_weights)[0], (*v.printed_weights)[1]});
    }
    if (v.printed_entropy_bits) item["printed_entropy_bits"] = *v.printed_entropy_bits;
    if (v.printed_norm_deviation) item["printed_norm_deviation"] = *v.printed_norm_deviation;
    vectors.push_back(std::move(item));
  }
  Json out{{"identification", "columns of Q and I-Q, normalized"},
           {"identification_unitary", report.identification_unitary},
           {"boundary", report.boundary},
           {"printed_max_entangled", report.printed_max_entangled},
           {"vectors", std::move(vectors)}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Assertion verdict_assertion(std::string name, const AnticliqueVerdict& v,
                            std::size_t required_dimension, const Tolerance& tol) {
  Assertion a;
  a.name = std::move(name);
  a.passed = v.passed && v.code_dimension >= required_dimension;
  a.residual = v.max_residual;
  a.details = {{"code_dimension", v.code_dimension}, {"constants", constants_json(v.constants)}};
  if (v.code_dimension < 2) {
    a.details["reason"] = "code_dimension < 2";
  } else if (v.max_residual > tol.eq_tol) {
    a.details["reason"] = "P A P differs from c_A P";
    a.details["witness_index"] = v.witness->basis_index;
    a.details["witness_fingerprint"] = v.witness->residual_fingerprint;
  }
  return a;
}

double printed_entropy(const EntanglementReport& e) {
  return e.vectors.front().printed_entropy_bits.value_or(0.0);
}

Assertion printed_entanglement_assertion(const EntanglementReport& e) {
  Assertion a;
  a.name = "printed_entanglement";
  const double h = printed_entropy(e);
  a.details = {{"printed_entropy_bits", h}};
  if (e.boundary) {
    a.passed = true;
    a.details["note"] = e.note;
    return a;
  }
  const bool at_max = std::abs(e.params.tau - 1.0 / (2.0 * std::numbers::sqrt2)) <= kMaxTauWindow;
  a.details["maximal_point"] = at_max;
  if (at_max) {
    a.residual = std::abs(h - 1.0);
    a.passed = a.residual <= kMaxEntropyTol;
  } else {
    a.passed = h > 0.0;
  }
  return a;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError("not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

struct ScanRow {
  Assertion assertion;
  bool max_entropy = false;
};

ScanRow scan_row(std::size_t index, const QParams& params, const CircleRep& rep,
                 const std::vector<MergedSpectrum>& merged, const Tolerance& tol) {
  const ComplexMatrix q = build_q(params);
  const double proj_residual = std::max(max_norm(q * q - q), max_norm(q - adjoint(q)));
  const OperatorGraph graph = orbit_span_analytic(rep, q, tol);
  const auto vp = verify_anticlique(rep.projections()[0], graph, tol);
  const auto vm = verify_anticlique(rep.projections()[1], graph, tol);
  const double generic_phi = 1.0;
  const auto spectral = anticliques_from_spectrum(rep, graph, std::span(&generic_phi, 1), tol);
  const bool spectral_ok = !spectral.empty() &&
                           std::all_of(spectral.begin(), spectral.end(),
                                       [](const SpectralVerdict& s) { return s.verdict.passed; });
  const EntanglementReport ent = entanglement_report(params, tol);

  Json merged_json = Json::array();
  for (const auto& m : merged) {
    const auto at = anticliques_from_spectrum(rep, graph, std::span(&m.phi, 1), tol);
    Json verdicts = Json::array();
    for (const auto& s : at) {
      verdicts.push_back({{"eigenphase", s.eigenphase},
                          {"code_dimension", s.verdict.code_dimension},
                          {"passed", s.verdict.passed},
                          {"max_residual", s.verdict.max_residual}});
    }
    merged_json.push_back({{"phi", m.phi}, {"verdicts", std::move(verdicts)}});
  }

  ScanRow row;
  const double h = printed_entropy(ent);
  row.max_entropy = std::abs(h - 1.0) <= kMaxEntropyTol;
  Assertion& a = row.assertion;
  a.name = "row_" + std::to_string(index);
  a.passed = proj_residual <= tol.eq_tol && graph.dimension() == 3 && vp.passed && vm.passed &&
             spectral_ok;
  a.residual = std::max({proj_residual, vp.max_residual, vm.max_residual});
  a.details = {{"params", params_json(params)},
               {"projection_residual", proj_residual},
               {"graph_dimension", graph.dimension()},
               {"anticlique_P_plus", vp.passed},
               {"anticlique_P_minus", vm.passed},
               {"spectral_anticliques_generic_phi", spectral_ok},
               {"merged_spectra", std::move(merged_json)},
               {"printed_entropy_bits", h},
               {"corrected_entropy_bits_e_plus", ent.vectors.front().entropy_bits},
               {"max_entropy", row.max_entropy},
               {"boundary", ent.boundary}};
  return row;
}

}  // namespace

Report run_demo4(const QParams& params, const Tolerance& tol) {
  params.validate();
  Report r;
  r.command = "demo4";
  r.inputs = params_json(params);
  r.inputs["eq_tol"] = tol.eq_tol;

  const ComplexMatrix q = build_q(params);
  const double idem = max_norm(q * q - q);
  const double herm = max_norm(q - adjoint(q));
  r.assertions.push_back({"q_projection", std::max(idem, herm) <= tol.eq_tol, std::max(idem, herm),
                          {{"idempotence_residual", idem}, {"hermiticity_residual", herm}}});
  const double tr_residual = std::abs(trace(q) - Complex(2.0));
  r.assertions.push_back({"q_trace_two", tr_residual <= tol.eq_tol, tr_residual, Json::object()});

  const ComplexMatrix complement = ComplexMatrix::identity(4) - q;
  const auto detected = detect_family(complement, tol);
  Assertion family{"complement_in_family", detected.has_value(), 0.0, Json::object()};
  if (detected) {
    family.residual = max_norm(build_q(*detected) - complement);
    family.details = {{"detected", params_json(*detected)}};
  }
  r.assertions.push_back(std::move(family));

  const CircleRep rep = rep_two_block(two_block_p_plus(), tol);
  const OperatorGraph graph = orbit_span_analytic(rep, q, tol);
  Json components = Json::array();
  for (const auto& c : frequency_components(rep, q, tol)) components.push_back(c.m);
  r.assertions.push_back({"graph_dimension", graph.dimension() == 3, 0.0,
                          {{"dimension", graph.dimension()}, {"frequencies", components}}});

  const OperatorSystemCheck sys = is_operator_system(graph, tol);
  r.assertions.push_back(
      {"graph_contains_identity", sys.contains_identity, sys.identity_residual, Json::object()});
  r.assertions.push_back(
      {"graph_adjoint_closed", sys.adjoint_closed, sys.adjoint_residual, Json::object()});

  const auto vp = verify_anticlique(rep.projections()[0], graph, tol);
  const auto vm = verify_anticlique(rep.projections()[1], graph, tol);
  r.assertions.push_back(verdict_assertion("anticlique_P_plus", vp, 2, tol));
  r.assertions.push_back(verdict_assertion("anticlique_P_minus", vm, 2, tol));

  const EntanglementReport ent = entanglement_report(params, tol);
  r.assertions.push_back(printed_entanglement_assertion(ent));

  r.constants = vp.constants;
  r.schmidt = entanglement_json(ent);
  return r;
}

Report run_bell(std::size_t d, std::size_t j, const Tolerance& tol) {
  const BellGraphReport b = verify_bell_graph(d, j, tol);
  Report r;
  r.command = "bell";
  r.inputs = {{"dim", d}, {"j", j}, {"eq_tol", tol.eq_tol}};
  r.assertions.push_back({"pinch_identity", b.pinch_ok, b.pinch_residual,
                          {{"expected", "I/" + std::to_string(d)}}});
  r.assertions.push_back({"graph_contains_identity", b.system.contains_identity,
                          b.system.identity_residual, Json::object()});
  r.assertions.push_back({"graph_adjoint_closed", b.system.adjoint_closed,
                          b.system.adjoint_residual, Json::object()});
  for (std::size_t s = 0; s < b.verdicts.size(); ++s) {
    r.assertions.push_back(
        verdict_assertion("anticlique_P_" + std::to_string(s + 1), b.verdicts[s], d, tol));
  }
  r.summary = Json{{"graph_dimension", b.graph_dimension}, {"seed", b.seed_label}};
  return r;
}

Report run_verify(const VerifyInputs& in, const Tolerance& tol) {
  const CircleRep rep = rep_from_json(parse_json(in.rep_json));
  const ComplexMatrix seed = matrix_from_json(parse_json(in.seed_json));
  const ComplexMatrix candidate = matrix_from_json(parse_json(in.projection_json));

  const RepValidation validation = rep_validate(rep, tol);
  if (!validation.ok()) {
    const auto& v = validation.violations.front();
    throw InputError(v.invariant + " violation: " + v.detail + " (residual " +
                     std::to_string(v.residual) + ")");
  }
  if (!seed.is_square() || seed.rows() != rep.dim()) {
    throw InputError("seed must be " + std::to_string(rep.dim()) + "x" + std::to_string(rep.dim()));
  }
  if (!candidate.is_square() || candidate.rows() != rep.dim()) {
    throw InputError("projection must be " + std::to_string(rep.dim()) + "x" +
                     std::to_string(rep.dim()));
  }
  if (!is_projection(candidate, tol)) {
    throw InputError("candidate is not an orthogonal projection");
  }
  if (std::round(trace(candidate).real()) < 1.0) throw InputError("candidate projection is zero");
  if (in.samples && *in.samples == 0) throw InputError("--samples must be positive");

  OperatorGraph graph;
  try {
    graph = orbit_span_analytic(rep, seed, tol, in.allow_general_seed);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }

  Report r;
  r.command = "verify";
  r.inputs = {{"rep", rep.describe()},
              {"seed_fingerprint", fingerprint(seed)},
              {"projection_fingerprint", fingerprint(candidate)},
              {"allow_general_seed", in.allow_general_seed},
              {"eq_tol", tol.eq_tol}};
  if (in.samples) r.inputs["samples"] = *in.samples;

  if (in.samples) {
    const OperatorGraph sampled = orbit_span_sampled(rep, seed, *in.samples, tol);
    const double distance = subspace_distance(graph, sampled);
    Assertion a{"sampled_matches_analytic",
                sampled.dimension() == graph.dimension() && distance <= kSubspaceTol, distance,
                {{"analytic_dimension", graph.dimension()},
                 {"sampled_dimension", sampled.dimension()},
                 {"exact_sample_count", exact_quadrature_size(rep)}}};
    r.assertions.push_back(std::move(a));
  }

  const AnticliqueVerdict v = verify_anticlique(candidate, graph, tol);
  r.assertions.push_back(verdict_assertion("anticlique", v, 2, tol));
  r.constants = v.constants;

  const OperatorSystemCheck sys = is_operator_system(graph, tol);
  r.summary = Json{{"graph_dimension", graph.dimension()},
                   {"contains_identity", sys.contains_identity},
                   {"adjoint_closed", sys.adjoint_closed}};
  return r;
}

Report run_scan(std::span<const double> taus, std::uint64_t seed, const Tolerance& tol,
                unsigned workers) {
  if (taus.empty()) throw InputError("scan: empty tau grid");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> winding(-2, 2);
  std::vector<QParams> params;
  for (double tau : taus) {
    QParams p;
    p.tau = tau;
    p.z1 = angle(rng);
    p.z2 = angle(rng);
    p.z4 = angle(rng);
    p.k = winding(rng);
    p.validate();
    params.push_back(p);
  }

  const CircleRep rep = rep_two_block(two_block_p_plus(), tol);
  const auto merged = scan_merged_spectra(rep.freqs());

  std::vector<ScanRow> rows(params.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(params.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(params.size());
  auto work = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      try {
        rows[i] = scan_row(i, params[i], rep, merged, tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report r;
  r.command = "scan";
  r.inputs = {{"tau_grid", std::vector<double>(taus.begin(), taus.end())},
              {"seed", seed},
              {"eq_tol", tol.eq_tol}};
  Json max_rows = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].assertion.passed) ++passed;
    if (rows[i].max_entropy) max_rows.push_back(i);
    r.assertions.push_back(std::move(rows[i].assertion));
  }
  Json merged_json = Json::array();
  for (const auto& m : merged) {
    Json partition = Json::array();
    for (const auto& cls : m.partition) {
      Json values = Json::array();
      for (std::size_t idx : cls) values.push_back(rep.freqs()[idx]);
      partition.push_back(std::move(values));
    }
    merged_json.push_back({{"phi", m.phi},
                           {"numerator", m.numerator},
                           {"denominator", m.denominator},
                           {"partition", std::move(partition)}});
  }
  r.summary = Json{{"rows", rows.size()},
                   {"passed_rows", passed},
                   {"max_entropy_rows", std::move(max_rows)},
                   {"merged_spectra", std::move(merged_json)}};
  return r;
}

Tolerance resolve_tolerance(std::optional<std::string_view> env_value, std::optional<double> flag) {
  Tolerance tol;
  if (flag) {
    tol.eq_tol = *flag;
  } else if (env_value && !trim(*env_value).empty()) {
    tol.eq_tol = parse_number(*env_value);
  }
  if (!std::isfinite(tol.eq_tol) || tol.eq_tol < 0.0) {
    throw InputError("tolerance must be a non-negative number");
  }
  tol.eig_tol = std::min(tol.eig_tol, tol.eq_tol);
  tol.validate();
  return tol;
}

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return parse_number(s);

  std::string_view coef = trim(s.substr(0, pos));
  double sign = 1.0;
  if (!coef.empty() && (coef.front() == '-' || coef.front() == '+')) {
    if (coef.front() == '-') sign = -1.0;
    coef = trim(coef.substr(1));
  }
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  const double factor = coef.empty() ? 1.0 : parse_number(coef);

  std::string_view rest = trim(s.substr(pos + 2));
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw InputError("cannot parse angle \"" + std::string(text) + "\"");
    divisor = parse_number(rest.substr(1));
    if (divisor == 0.0) throw InputError("angle divides by zero");
  }
  return sign * factor * kPi / divisor;
}

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<double> out;
  spec = trim(spec);
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) throw InputError("empty item in grid");
    const auto c1 = item.find(':');
    if (c1 == std::string_view::npos) {
      out.push_back(parse_number(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw InputError("range must be lo:hi:count");
    const double lo = parse_number(item.substr(0, c1));
    const double hi = parse_number(item.substr(c1 + 1, c2 - c1 - 1));
    const double count = parse_number(item.substr(c2 + 1));
    if (count < 1.0 || count != std::floor(count)) throw InputError("range count must be a positive integer");
    const auto n = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
  }
  return out;
}

}  // namespace covgraph
