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

// Explicit instances: the two-block projection family Q(tau, z) in C^4 with
// its tensor-product identification, and the generalized Bell construction
// in C^d (x) C^d.
//
// Basis conventions: C^4 is ordered {e+, h+, e-, h-}; product bases are
// lexicographic, |i>|k> <-> d*(i-1) + (k-1) for 1-based labels.

#ifndef COVGRAPH_CONSTRUCTIONS_HPP
#define COVGRAPH_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covgraph/anticlique.hpp"
#include "covgraph/circle_rep.hpp"
#include "covgraph/graph.hpp"
#include "covgraph/matrix.hpp"

namespace covgraph {

/// Parameters of the projection family. z3 is derived so that
/// z3 - z1 = z4 - z2 + pi + 2 pi k holds exactly.
struct QParams {
  double tau = 0.0;  // in [0, 1/2]
  double z1 = 0.0;
  double z2 = 0.0;
  double z4 = 0.0;
  int k = 0;

  double z3() const;
  /// Throws InputError for tau outside [0, 1/2] or non-finite angles.
  void validate() const;
};

/// The 4x4 rank-2 projection with diagonal 1/2 and off-block entries
/// tau e^{i z1}, sqrt(1/4 - tau^2) e^{i z2}, sqrt(1/4 - tau^2) e^{i z3}, tau e^{i z4}.
ComplexMatrix build_q(const QParams& params);

/// The P+ of the block representation, diag(1, 1, 0, 0).
ComplexMatrix two_block_p_plus();

/// Recovers parameters reproducing q (k normalized to 0), or nothing when q
/// is not a family member.
std::optional<QParams> detect_family(const ComplexMatrix& q, const Tolerance& tol = {});

struct SpanningVectors {
  ComplexMatrix xi_q;
  ComplexMatrix eta_q;
  ComplexMatrix xi_complement;
  ComplexMatrix eta_complement;
};

/// First two columns of Q and of I - Q. Each has norm 1/sqrt(2) and the
/// pairs span QH and (I - Q)H. Throws PreconditionError unless q is a
/// projection with the family's diagonal and zero diagonal-block couplings.
SpanningVectors q_vectors(const ComplexMatrix& q, const Tolerance& tol = {});

/// The four vectors exactly as the original construction printed them. They
/// are known to be inconsistent (rank 3, and the complement pair is not
/// annihilated by Q); kept for the discrepancy checks.
SpanningVectors printed_spanning_vectors(const QParams& params);

enum class ProductLabel { xx, xy, yx, yy };

std::string to_string(ProductLabel label);
/// Lexicographic index in C^2 (x) C^2 with x = |0>, y = |1>.
std::size_t product_index(ProductLabel label);

struct LabeledTarget {
  ProductLabel label;
  ComplexMatrix vector;
};

struct TensorId {
  ComplexMatrix map;  // column product_index(label) holds that label's target
  std::vector<LabeledTarget> assignment;
  bool unitary = false;
};

/// Map sending each product basis vector to its target. Targets are scaled
/// to unit norm when normalize is set. Throws RankError when the targets'
/// Gram determinant is not above eq_tol.
TensorId tensor_identification(std::span<const LabeledTarget> targets, bool normalize,
                               const Tolerance& tol = {});

/// The assignment xi_Q = x(x)x, eta_Q = x(x)y, xi_{I-Q} = y(x)y, eta_{I-Q} = y(x)x.
TensorId tensor_identification(const SpanningVectors& vectors, bool normalize,
                               const Tolerance& tol = {});

/// Numerical rank of the Gram matrix of column vectors (eigenvalues above
/// eq_tol times the largest).
std::size_t gram_rank(std::span<const ComplexMatrix> vectors, const Tolerance& tol = {});
/// Determinant of the Gram matrix (product of its eigenvalues).
double gram_determinant(std::span<const ComplexMatrix> vectors, const Tolerance& tol = {});

struct BasisVectorEntanglement {
  std::string name;  // "e+", "h+", "e-", "h-"
  /// Schmidt data of T^dagger v under the column-based unitary identification.
  std::vector<double> coefficients;
  double entropy_bits = 0.0;
  /// Normalized weights of the printed two-term expansion (e+ and h+ only).
  std::optional<std::array<double, 2>> printed_weights;
  std::optional<double> printed_entropy_bits;
  /// | ||printed expansion|| - 1 |, absent when its prefactor is singular.
  std::optional<double> printed_norm_deviation;
  bool discrepancy = false;
};

struct EntanglementReport {
  QParams params;
  bool boundary = false;  // tau in {0, 1/2}: the entanglement claim does not apply
  std::string note;
  bool identification_unitary = false;
  bool printed_max_entangled = false;
  std::vector<BasisVectorEntanglement> vectors;
};

EntanglementReport entanglement_report(const QParams& params, const Tolerance& tol = {});

/// (1/sqrt d) sum_k e^{2 pi i s k / d} |k>|k - n mod d>, 1-based s, n.
ComplexMatrix bell_state(std::size_t d, std::size_t s, std::size_t n);

/// Frequencies 1..d with P_s projecting onto span{psi_{s n} : n}.
CircleRep bell_rep(std::size_t d);

/// sum_k |j>|j - k mod d><j - k mod d|<j|, i.e. |j><j| (x) I_d.
ComplexMatrix q_j(std::size_t d, std::size_t j);

struct BellGraphReport {
  std::size_t d = 0;
  std::string seed_label;
  double pinch_residual = 0.0;  // ||pinch(seed) - I/d||_max
  bool pinch_ok = false;
  std::size_t graph_dimension = 0;
  OperatorSystemCheck system;
  std::vector<AnticliqueVerdict> verdicts;  // one per P_s
  bool anticliques_ok = false;

  bool passed() const {
    return pinch_ok && system.contains_identity && system.adjoint_closed && anticliques_ok;
  }
};

/// Pinching identity, operator-system axioms and anticlique status of every
/// P_s for the graph generated by seed under bell_rep(d).
BellGraphReport verify_bell_seed(std::size_t d, const ComplexMatrix& seed, std::string seed_label,
                                 const Tolerance& tol = {});

/// verify_bell_seed with seed q_j(d, j).
BellGraphReport verify_bell_graph(std::size_t d, std::size_t j, const Tolerance& tol = {});

}  // namespace covgraph

#endif  // COVGRAPH_CONSTRUCTIONS_HPP
