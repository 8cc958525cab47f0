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

#include "covgraph/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "covgraph/error.hpp"
#include "covgraph/linalg.hpp"

namespace covgraph {

namespace {

constexpr double kPi = std::numbers::pi;

double complementary_amplitude(double tau) { return std::sqrt(std::max(0.0, 0.25 - tau * tau)); }

ComplexMatrix vector4(Complex a, Complex b, Complex c, Complex d) {
  return ComplexMatrix(4, 1, {a, b, c, d});
}

ComplexMatrix gram_matrix(std::span<const ComplexMatrix> vectors) {
  const std::size_t n = vectors.size();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = hs_inner(vectors[i], vectors[j]);
  return g;
}

// 0-based storage index of the 1-based label (value mod d), where residue 0
// stands for label d.
std::size_t label_index(long long value, std::size_t d) {
  const auto dd = static_cast<long long>(d);
  return static_cast<std::size_t>((((value - 1) % dd) + dd) % dd);
}

void require_bell_indices(std::size_t d, std::size_t a, std::size_t b, const char* what) {
  if (d < 2) throw InputError(std::string(what) + ": dimension d must be at least 2");
  if (a < 1 || a > d || b < 1 || b > d) {
    throw InputError(std::string(what) + ": indices must lie in 1.." + std::to_string(d));
  }
}

}  // namespace

double QParams::z3() const { return z1 + z4 - z2 + kPi + 2.0 * kPi * k; }

void QParams::validate() const {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 0.5) {
    throw InputError("tau must lie in [0, 1/2], got " + std::to_string(tau));
  }
  if (!std::isfinite(z1) || !std::isfinite(z2) || !std::isfinite(z4)) {
    throw InputError("angles must be finite");
  }
}

ComplexMatrix build_q(const QParams& params) {
  params.validate();
  const double t = params.tau;
  const double s = complementary_amplitude(t);
  ComplexMatrix q(4, 4);
  q(0, 0) = q(1, 1) = q(2, 2) = q(3, 3) = 0.5;
  q(0, 2) = std::polar(t, params.z1);
  q(0, 3) = std::polar(s, params.z2);
  q(1, 2) = std::polar(s, params.z3());
  q(1, 3) = std::polar(t, params.z4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < 4; ++j) q(j, i) = std::conj(q(i, j));
  return q;
}

ComplexMatrix two_block_p_plus() {
  const std::array<Complex, 4> diag{1.0, 1.0, 0.0, 0.0};
  return ComplexMatrix::diagonal(diag);
}

std::optional<QParams> detect_family(const ComplexMatrix& q, const Tolerance& tol) {
  if (q.rows() != 4 || q.cols() != 4) return std::nullopt;
  const double tau = std::abs(q(0, 2));
  if (!(tau <= 0.5 + tol.eq_tol)) return std::nullopt;
  QParams p;
  p.tau = std::min(tau, 0.5);
  p.z2 = std::arg(q(0, 3));
  p.z4 = std::arg(q(1, 3));
  // With tau ~ 0 the z1 entry is invisible, so z1 is chosen to reproduce z3.
  p.z1 = tau > tol.eq_tol ? std::arg(q(0, 2)) : std::arg(q(1, 2)) - p.z4 + p.z2 - kPi;
  p.k = 0;
  if (max_norm(build_q(p) - q) > tol.eq_tol) return std::nullopt;
  return p;
}

SpanningVectors q_vectors(const ComplexMatrix& q, const Tolerance& tol) {
  if (q.rows() != 4 || q.cols() != 4) throw PreconditionError("q_vectors: expected a 4x4 matrix");
  if (!is_projection(q, tol)) throw PreconditionError("q_vectors: matrix is not a projection");
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(q(i, i) - 0.5) > tol.eq_tol) {
      throw PreconditionError("q_vectors: diagonal entries must equal 1/2");
    }
  }
  if (std::abs(q(0, 1)) > tol.eq_tol || std::abs(q(2, 3)) > tol.eq_tol) {
    throw PreconditionError("q_vectors: diagonal blocks must be multiples of the identity");
  }
  const ComplexMatrix complement = ComplexMatrix::identity(4) - q;
  return {q.column(0), q.column(1), complement.column(0), complement.column(1)};
}

SpanningVectors printed_spanning_vectors(const QParams& params) {
  params.validate();
  const double t = params.tau;
  const double s = complementary_amplitude(t);
  const Complex a = std::polar(t, -params.z1);
  const Complex d = std::polar(s, -params.z2);
  const Complex q = std::polar(s, -params.z3());
  const Complex b = std::polar(t, -params.z4);
  return {vector4(0.5, 0.0, a, d), vector4(0.0, 0.5, a, d), vector4(0.5, 0.0, q, b),
          vector4(0.0, 0.5, q, b)};
}

std::string to_string(ProductLabel label) {
  switch (label) {
    case ProductLabel::xx: return "x(x)x";
    case ProductLabel::xy: return "x(x)y";
    case ProductLabel::yx: return "y(x)x";
    case ProductLabel::yy: return "y(x)y";
  }
  return "?";
}

std::size_t product_index(ProductLabel label) {
  switch (label) {
    case ProductLabel::xx: return 0;
    case ProductLabel::xy: return 1;
    case ProductLabel::yx: return 2;
    case ProductLabel::yy: return 3;
  }
  return 0;
}

double gram_determinant(std::span<const ComplexMatrix> vectors, const Tolerance& tol) {
  if (vectors.empty()) return 1.0;
  const HermitianEigen eig = eig_hermitian(gram_matrix(vectors), tol);
  double det = 1.0;
  for (double l : eig.eigenvalues) det *= l;
  return det;
}

std::size_t gram_rank(std::span<const ComplexMatrix> vectors, const Tolerance& tol) {
  if (vectors.empty()) return 0;
  const HermitianEigen eig = eig_hermitian(gram_matrix(vectors), tol);
  const double top = eig.eigenvalues.back();
  if (top <= tol.eq_tol) return 0;
  return static_cast<std::size_t>(std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                                [&](double l) { return l > tol.eq_tol * top; }));
}

TensorId tensor_identification(std::span<const LabeledTarget> targets, bool normalize,
                               const Tolerance& tol) {
  if (targets.size() != 4) throw DimensionError("tensor_identification: need four targets");
  std::set<std::size_t> seen;
  std::vector<LabeledTarget> assignment;
  std::vector<ComplexMatrix> vectors;
  for (const auto& t : targets) {
    if (t.vector.rows() != 4 || t.vector.cols() != 1) {
      throw DimensionError("tensor_identification: targets must be vectors in C^4");
    }
    if (!seen.insert(product_index(t.label)).second) {
      throw PreconditionError("tensor_identification: label " + to_string(t.label) +
                              " assigned twice");
    }
    ComplexMatrix v = t.vector;
    if (normalize) {
      const double n = frobenius_norm(v);
      if (n == 0.0) throw RankError("tensor_identification: zero target");
      v *= 1.0 / n;
    }
    vectors.push_back(v);
    assignment.push_back({t.label, std::move(v)});
  }
  const double det = gram_determinant(vectors, tol);
  if (!(det > tol.eq_tol)) {
    throw RankError("tensor_identification: targets are linearly dependent (Gram determinant " +
                    std::to_string(det) + ")");
  }
  ComplexMatrix map(4, 4);
  for (const auto& a : assignment) {
    const std::size_t col = product_index(a.label);
    for (std::size_t i = 0; i < 4; ++i) map(i, col) = a.vector(i, 0);
  }
  const bool unitary = is_unitary(map, tol);
  return {std::move(map), std::move(assignment), unitary};
}

TensorId tensor_identification(const SpanningVectors& v, bool normalize, const Tolerance& tol) {
  const std::array<LabeledTarget, 4> targets{
      LabeledTarget{ProductLabel::xx, v.xi_q}, LabeledTarget{ProductLabel::xy, v.eta_q},
      LabeledTarget{ProductLabel::yy, v.xi_complement},
      LabeledTarget{ProductLabel::yx, v.eta_complement}};
  return tensor_identification(targets, normalize, tol);
}

EntanglementReport entanglement_report(const QParams& params, const Tolerance& tol) {
  const ComplexMatrix q = build_q(params);
  const TensorId id = tensor_identification(q_vectors(q, tol), /*normalize=*/true, tol);

  EntanglementReport report;
  report.params = params;
  report.identification_unitary = id.unitary;
  report.boundary = params.tau <= tol.eq_tol || params.tau >= 0.5 - tol.eq_tol;
  if (report.boundary) {
    report.note = "boundary tau: separable case, excluded from the entanglement claim";
  }

  const double t = params.tau;
  const double s = complementary_amplitude(t);
  // Printed expansions of e+ and h+ share the coefficient pair
  // (s e^{i z3}, t e^{i z4}) over orthogonal product vectors.
  const double total = s * s + t * t;
  const std::array<double, 2> printed_raw{s * s / total, t * t / total};
  std::array<double, 2> printed = printed_raw;
  std::sort(printed.begin(), printed.end(), std::greater<>());
  const Complex denominator = std::polar(s, params.z3()) + std::polar(t, params.z4);
  std::optional<double> norm_deviation;
  if (std::abs(denominator) > 1e-300) {
    norm_deviation = std::abs(2.0 * std::sqrt(total) / std::abs(denominator) - 1.0);
  }
  const double printed_entropy = entropy_bits(printed);
  report.printed_max_entangled = std::abs(printed_entropy - 1.0) <= 1e-9;

  const ComplexMatrix map_adj = adjoint(id.map);
  const std::array<const char*, 4> names{"e+", "h+", "e-", "h-"};
  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexMatrix pulled = map_adj * ComplexMatrix::basis_vector(4, i);
    const SchmidtDecomposition sd = schmidt(pulled, 2, 2, tol);
    BasisVectorEntanglement entry;
    entry.name = names[i];
    entry.coefficients = sd.coefficients;
    entry.entropy_bits = sd.entropy_bits;
    if (i < 2) {
      entry.printed_weights = printed;
      entry.printed_entropy_bits = printed_entropy;
      entry.printed_norm_deviation = norm_deviation;
      for (std::size_t k = 0; k < 2; ++k) {
        const double w = sd.coefficients[k] * sd.coefficients[k];
        if (std::abs(w - printed[k]) > 1e-9) entry.discrepancy = true;
      }
    }
    report.vectors.push_back(std::move(entry));
  }
  return report;
}

ComplexMatrix bell_state(std::size_t d, std::size_t s, std::size_t n) {
  require_bell_indices(d, s, n, "bell_state");
  ComplexMatrix psi(d * d, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 1; k <= d; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>((s * k) % d) / static_cast<double>(d);
    const std::size_t second =
        label_index(static_cast<long long>(k) - static_cast<long long>(n), d);
    psi((k - 1) * d + second, 0) += std::polar(amp, angle);
  }
  return psi;
}

CircleRep bell_rep(std::size_t d) {
  if (d < 2) throw InputError("bell_rep: dimension d must be at least 2");
  std::vector<int> freqs;
  std::vector<ComplexMatrix> projections;
  for (std::size_t s = 1; s <= d; ++s) {
    ComplexMatrix p(d * d, d * d);
    for (std::size_t n = 1; n <= d; ++n) p += outer(bell_state(d, s, n));
    freqs.push_back(static_cast<int>(s));
    projections.push_back(std::move(p));
  }
  return CircleRep::make(std::move(freqs), std::move(projections));
}

ComplexMatrix q_j(std::size_t d, std::size_t j) {
  require_bell_indices(d, j, 1, "q_j");
  ComplexMatrix q(d * d, d * d);
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t second =
        label_index(static_cast<long long>(j) - static_cast<long long>(k), d);
    const std::size_t idx = (j - 1) * d + second;
    q(idx, idx) += 1.0;
  }
  return q;
}

BellGraphReport verify_bell_seed(std::size_t d, const ComplexMatrix& seed, std::string seed_label,
                                 const Tolerance& tol) {
  const CircleRep rep = bell_rep(d);
  BellGraphReport report;
  report.d = d;
  report.seed_label = std::move(seed_label);
  const ComplexMatrix target = (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d * d);
  report.pinch_residual = max_norm(pinch(rep, seed) - target);
  report.pinch_ok = report.pinch_residual <= tol.eq_tol;

  const OperatorGraph graph = orbit_span_analytic(rep, seed, tol);
  report.graph_dimension = graph.dimension();
  report.system = is_operator_system(graph, tol);
  report.anticliques_ok = true;
  for (const auto& p : rep.projections()) {
    AnticliqueVerdict v = verify_anticlique(p, graph, tol);
    if (!v.passed || v.code_dimension != d) report.anticliques_ok = false;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

BellGraphReport verify_bell_graph(std::size_t d, std::size_t j, const Tolerance& tol) {
  return verify_bell_seed(d, q_j(d, j), "Q_" + std::to_string(j), tol);
}

}  // namespace covgraph
