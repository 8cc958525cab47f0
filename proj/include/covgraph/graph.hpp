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

// Operator graphs spanned by the orbit {U_phi M0 U_phi^dagger} of a seed
// operator under a circle representation.

#ifndef COVGRAPH_GRAPH_HPP
#define COVGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covgraph/circle_rep.hpp"
#include "covgraph/matrix.hpp"

namespace covgraph {

struct GraphSource {
  std::string rep;             // CircleRep::describe() of the generating representation
  std::string seed_fingerprint;
  std::string method;          // "analytic", "sampled:N", "explicit", ...
};

/// Hilbert-Schmidt orthonormal basis of an operator span.
struct OperatorGraph {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> basis;
  GraphSource source;

  std::size_t dimension() const { return basis.size(); }
};

/// Coefficient of e^{i m phi} in U_phi M0 U_phi^dagger.
struct FrequencyComponent {
  int m = 0;
  ComplexMatrix a;
};

/// Nonzero components (||A_m||_max > eq_tol), sorted by m.
std::vector<FrequencyComponent> frequency_components(const CircleRep& rep, const ComplexMatrix& m0,
                                                     const Tolerance& tol = {});

/// Orbit span from the frequency components. Requires a positive
/// semidefinite seed unless allow_general_seed is set.
OperatorGraph orbit_span_analytic(const CircleRep& rep, const ComplexMatrix& m0,
                                  const Tolerance& tol = {}, bool allow_general_seed = false);

/// Orbit span from N uniform samples phi_k = 2 pi k / N.
OperatorGraph orbit_span_sampled(const CircleRep& rep, const ComplexMatrix& m0,
                                 std::size_t n_samples, const Tolerance& tol = {});

/// Span of an explicit operator list.
OperatorGraph graph_from_operators(std::span<const ComplexMatrix> ops, const Tolerance& tol = {},
                                   GraphSource source = {"", "", "explicit"});

/// span(graph) + C I.
OperatorGraph adjoin_identity(const OperatorGraph& graph, const Tolerance& tol = {});

/// Orthogonal (HS) projection of x onto span(basis).
ComplexMatrix project_onto(const OperatorGraph& graph, const ComplexMatrix& x);

/// ||x - project_onto(graph, x)||_max.
double span_residual(const OperatorGraph& graph, const ComplexMatrix& x);

struct OperatorSystemCheck {
  bool contains_identity = false;
  bool adjoint_closed = false;
  double identity_residual = 0.0;
  double adjoint_residual = 0.0;  // worst over basis elements
};

OperatorSystemCheck is_operator_system(const OperatorGraph& graph, const Tolerance& tol = {});

/// For a two-frequency representation, with F0 the component of the larger
/// frequency difference and G0 its opposite, returns h such that
/// G0 = h F0^dagger when that holds within eq_tol * ||G0||_F. Returns 0 when
/// both vanish and nothing when only F0 does.
std::optional<Complex> find_adjoint_ratio(const CircleRep& rep, const ComplexMatrix& m0,
                                          const Tolerance& tol = {});

/// n^2 x n^2 matrix of the HS projector onto span(basis) acting on
/// row-major vectorized operators.
ComplexMatrix span_projector(const OperatorGraph& graph);

/// ||span_projector(a) - span_projector(b)||_max.
double subspace_distance(const OperatorGraph& a, const OperatorGraph& b);

/// Short stable hex digest of the matrix entries.
std::string fingerprint(const ComplexMatrix& m);

}  // namespace covgraph

#endif  // COVGRAPH_GRAPH_HPP
