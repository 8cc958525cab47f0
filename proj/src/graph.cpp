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

#include "covgraph/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string_view>

#include "covgraph/error.hpp"
#include "covgraph/linalg.hpp"

namespace covgraph {

namespace {

void require_seed_shape(const CircleRep& rep, const ComplexMatrix& m0, const char* what) {
  if (!m0.is_square() || m0.rows() != rep.dim()) {
    throw DimensionError(std::string(what) + ": seed must be " + std::to_string(rep.dim()) + "x" +
                         std::to_string(rep.dim()));
  }
}

OperatorGraph make_graph(std::size_t dim, std::span<const ComplexMatrix> ops, const Tolerance& tol,
                         GraphSource source) {
  OperatorBasis ob = gram_schmidt_operators(ops, tol);
  return OperatorGraph{dim, std::move(ob.basis), std::move(source)};
}

}  // namespace

std::string fingerprint(const ComplexMatrix& m) {
  const auto entries = m.entries();
  const std::string_view bytes(reinterpret_cast<const char*>(entries.data()),
                               entries.size() * sizeof(Complex));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zux%zu:%016zx", m.rows(), m.cols(),
                std::hash<std::string_view>{}(bytes));
  return buf;
}

std::vector<FrequencyComponent> frequency_components(const CircleRep& rep, const ComplexMatrix& m0,
                                                     const Tolerance& tol) {
  require_seed_shape(rep, m0, "frequency_components");
  std::map<int, ComplexMatrix> by_m;
  const auto freqs = rep.freqs();
  const auto projections = rep.projections();
  for (std::size_t j = 0; j < rep.size(); ++j) {
    const ComplexMatrix left = projections[j] * m0;
    for (std::size_t k = 0; k < rep.size(); ++k) {
      const int m = freqs[j] - freqs[k];
      ComplexMatrix term = left * projections[k];
      auto it = by_m.find(m);
      if (it == by_m.end()) {
        by_m.emplace(m, std::move(term));
      } else {
        it->second += term;
      }
    }
  }
  std::vector<FrequencyComponent> out;
  for (auto& [m, a] : by_m) {
    if (max_norm(a) > tol.eq_tol) out.push_back({m, std::move(a)});
  }
  return out;
}

OperatorGraph orbit_span_analytic(const CircleRep& rep, const ComplexMatrix& m0,
                                  const Tolerance& tol, bool allow_general_seed) {
  require_seed_shape(rep, m0, "orbit_span_analytic");
  if (!allow_general_seed) {
    if (!is_hermitian(m0, tol)) {
      throw PreconditionError("orbit_span_analytic: seed is not Hermitian, hence not positive");
    }
    const double lowest = eig_hermitian(m0, tol).eigenvalues.front();
    if (lowest < -tol.eq_tol) {
      throw PreconditionError("orbit_span_analytic: seed is not positive semidefinite (eigenvalue " +
                              std::to_string(lowest) + ")");
    }
  }
  std::vector<ComplexMatrix> ops;
  for (auto& c : frequency_components(rep, m0, tol)) ops.push_back(std::move(c.a));
  return make_graph(rep.dim(), ops, tol, {rep.describe(), fingerprint(m0), "analytic"});
}

OperatorGraph orbit_span_sampled(const CircleRep& rep, const ComplexMatrix& m0,
                                 std::size_t n_samples, const Tolerance& tol) {
  require_seed_shape(rep, m0, "orbit_span_sampled");
  if (n_samples == 0) throw PreconditionError("orbit_span_sampled: need at least one sample");
  std::vector<ComplexMatrix> ops;
  ops.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double phi =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_samples);
    const ComplexMatrix u = detail::evaluate_unchecked(rep, phi);
    ops.push_back(u * m0 * adjoint(u));
  }
  return make_graph(rep.dim(), ops, tol,
                    {rep.describe(), fingerprint(m0), "sampled:" + std::to_string(n_samples)});
}

OperatorGraph graph_from_operators(std::span<const ComplexMatrix> ops, const Tolerance& tol,
                                   GraphSource source) {
  if (ops.empty()) throw DimensionError("graph_from_operators: no operators");
  if (!ops.front().is_square()) throw DimensionError("graph_from_operators: operators must be square");
  return make_graph(ops.front().rows(), ops, tol, std::move(source));
}

OperatorGraph adjoin_identity(const OperatorGraph& graph, const Tolerance& tol) {
  std::vector<ComplexMatrix> ops{ComplexMatrix::identity(graph.dim)};
  ops.insert(ops.end(), graph.basis.begin(), graph.basis.end());
  GraphSource source = graph.source;
  source.method += "+identity";
  return make_graph(graph.dim, ops, tol, std::move(source));
}

ComplexMatrix project_onto(const OperatorGraph& graph, const ComplexMatrix& x) {
  if (!x.is_square() || x.rows() != graph.dim) {
    throw DimensionError("project_onto: operator does not match graph dimension");
  }
  ComplexMatrix out(graph.dim, graph.dim);
  for (const auto& b : graph.basis) out += hs_inner(b, x) * b;
  return out;
}

double span_residual(const OperatorGraph& graph, const ComplexMatrix& x) {
  return max_norm(x - project_onto(graph, x));
}

OperatorSystemCheck is_operator_system(const OperatorGraph& graph, const Tolerance& tol) {
  OperatorSystemCheck check;
  check.identity_residual = span_residual(graph, ComplexMatrix::identity(graph.dim));
  check.contains_identity = check.identity_residual <= tol.eq_tol;
  for (const auto& b : graph.basis) {
    check.adjoint_residual = std::max(check.adjoint_residual, span_residual(graph, adjoint(b)));
  }
  check.adjoint_closed = check.adjoint_residual <= tol.eq_tol;
  return check;
}

std::optional<Complex> find_adjoint_ratio(const CircleRep& rep, const ComplexMatrix& m0,
                                          const Tolerance& tol) {
  require_seed_shape(rep, m0, "find_adjoint_ratio");
  if (rep.size() != 2) {
    throw PreconditionError("find_adjoint_ratio: representation must have exactly two frequencies");
  }
  const std::size_t hi = rep.freqs()[0] > rep.freqs()[1] ? 0 : 1;
  const std::size_t lo = 1 - hi;
  const auto projections = rep.projections();
  const ComplexMatrix f0 = projections[hi] * m0 * projections[lo];
  const ComplexMatrix g0 = projections[lo] * m0 * projections[hi];
  const bool f0_zero = max_norm(f0) <= tol.eq_tol;
  const bool g0_zero = max_norm(g0) <= tol.eq_tol;
  if (f0_zero) {
    if (g0_zero) return Complex{};
    return std::nullopt;
  }
  const ComplexMatrix f0_adj = adjoint(f0);
  const Complex h = hs_inner(f0_adj, g0) / hs_inner(f0_adj, f0_adj);
  if (frobenius_norm(g0 - h * f0_adj) <= tol.eq_tol * frobenius_norm(g0)) return h;
  return std::nullopt;
}

ComplexMatrix span_projector(const OperatorGraph& graph) {
  const std::size_t n2 = graph.dim * graph.dim;
  ComplexMatrix proj(n2, n2);
  for (const auto& b : graph.basis) {
    const auto e = b.entries();
    for (std::size_t i = 0; i < n2; ++i) {
      if (e[i] == Complex{}) continue;
      for (std::size_t j = 0; j < n2; ++j) proj(i, j) += e[i] * std::conj(e[j]);
    }
  }
  return proj;
}

double subspace_distance(const OperatorGraph& a, const OperatorGraph& b) {
  if (a.dim != b.dim) throw DimensionError("subspace_distance: graphs act on different spaces");
  return max_norm(span_projector(a) - span_projector(b));
}

}  // namespace covgraph
