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

#include "covgraph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "covgraph/error.hpp"

namespace covgraph {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary G = diag(1, e^{-i alpha}) R(theta)
// acting on coordinates (p, q): a <- G^dagger a G, v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex b = a(p, q);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;
  const Complex phase = b / abs_b;
  const Complex phase_c = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * abs_b, aqq - app);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_c * akq;
    a(k, q) = s * akp + c * phase_c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_c * vkq;
    v(k, q) = s * vkp + c * phase_c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

double wrap_phase(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t -= two_pi;
  return t;
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& input, const Tolerance& tol) {
  if (!input.is_square()) throw DimensionError("eig_hermitian: matrix is not square");
  if (!is_hermitian(input, tol)) {
    throw PreconditionError("eig_hermitian: matrix is not Hermitian (residual " +
                            std::to_string(max_norm(input - adjoint(input))) + ")");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = 0.5 * (input + adjoint(input));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(a);

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol.eig_tol * scale) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged) {
    throw NumericalError("eig_hermitian: no convergence after " + std::to_string(kMaxSweeps) +
                         " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianEigen result{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

std::vector<SpectralComponent> spectral_projections_unitary(const ComplexMatrix& u,
                                                            const Tolerance& tol) {
  if (!u.is_square()) throw DimensionError("spectral_projections_unitary: matrix is not square");
  if (!is_unitary(u, tol)) {
    throw PreconditionError("spectral_projections_unitary: matrix is not unitary");
  }
  const std::size_t n = u.rows();
  const ComplexMatrix u_adj = adjoint(u);
  const ComplexMatrix re_part = 0.5 * (u + u_adj);
  const ComplexMatrix im_part = Complex(0.0, -0.5) * (u - u_adj);

  HermitianEigen first = eig_hermitian(re_part, tol);
  ComplexMatrix vecs = first.eigenvectors;

  // Second stage inside each cluster of (numerically) equal real parts.
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && first.eigenvalues[end] - first.eigenvalues[end - 1] <= tol.degeneracy_tol) {
      ++end;
    }
    const std::size_t g = end - start;
    if (g > 1) {
      ComplexMatrix block(n, g);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < g; ++k) block(i, k) = vecs(i, start + k);
      ComplexMatrix reduced = adjoint(block) * im_part * block;
      reduced = 0.5 * (reduced + adjoint(reduced));
      const HermitianEigen second = eig_hermitian(reduced, tol);
      const ComplexMatrix rotated = block * second.eigenvectors;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < g; ++k) vecs(i, start + k) = rotated(i, k);
    }
    start = end;
  }

  struct Phased {
    double phase;
    std::size_t column;
  };
  std::vector<Phased> phased(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix v = vecs.column(k);
    const ComplexMatrix v_adj = adjoint(v);
    const double c = (v_adj * re_part * v)(0, 0).real();
    const double s = (v_adj * im_part * v)(0, 0).real();
    phased[k] = {wrap_phase(std::atan2(s, c)), k};
  }
  std::sort(phased.begin(), phased.end(),
            [](const Phased& x, const Phased& y) { return x.phase < y.phase; });

  std::vector<std::vector<Phased>> clusters;
  for (const auto& item : phased) {
    if (!clusters.empty() && item.phase - clusters.back().back().phase <= tol.degeneracy_tol) {
      clusters.back().push_back(item);
    } else {
      clusters.push_back({item});
    }
  }
  // Phases near 2*pi wrap around onto phases near 0.
  if (clusters.size() > 1) {
    const double gap = clusters.front().front().phase + 2.0 * std::numbers::pi -
                       clusters.back().back().phase;
    if (gap <= tol.degeneracy_tol) {
      clusters.front().insert(clusters.front().end(), clusters.back().begin(),
                              clusters.back().end());
      clusters.pop_back();
    }
  }

  std::vector<SpectralComponent> out;
  out.reserve(clusters.size());
  for (const auto& cluster : clusters) {
    ComplexMatrix proj(n, n);
    Complex mean_phase{};
    for (const auto& item : cluster) {
      proj += outer(vecs.column(item.column));
      mean_phase += std::polar(1.0, item.phase);
    }
    out.push_back({wrap_phase(std::arg(mean_phase)), std::move(proj)});
  }
  std::sort(out.begin(), out.end(), [](const SpectralComponent& x, const SpectralComponent& y) {
    return x.eigenphase < y.eigenphase;
  });
  return out;
}

double entropy_bits(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w > 0.0) h -= w * std::log2(w);
  }
  return h;
}

SchmidtDecomposition schmidt(const ComplexMatrix& v, std::size_t dim_a, std::size_t dim_b,
                             const Tolerance& tol) {
  if (dim_a == 0 || dim_b == 0) throw PreconditionError("schmidt: factor dimensions must be positive");
  if (v.cols() != 1 || v.rows() != dim_a * dim_b) {
    throw PreconditionError("schmidt: expected a column vector of length " +
                            std::to_string(dim_a * dim_b));
  }
  const double norm = frobenius_norm(v);
  if (std::abs(norm - 1.0) > tol.eq_tol) {
    throw PreconditionError("schmidt: vector is not normalized (norm " + std::to_string(norm) + ")");
  }
  ComplexMatrix coeffs(dim_a, dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t k = 0; k < dim_b; ++k) coeffs(i, k) = v(i * dim_b + k, 0);

  const ComplexMatrix gram =
      dim_a <= dim_b ? coeffs * adjoint(coeffs) : adjoint(coeffs) * coeffs;
  const HermitianEigen eig = eig_hermitian(gram, tol);

  SchmidtDecomposition out;
  std::vector<double> weights;
  for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it) {
    const double w = std::max(*it, 0.0);
    weights.push_back(w);
    out.coefficients.push_back(std::sqrt(w));
  }
  out.entropy_bits = entropy_bits(weights);
  return out;
}

OperatorBasis gram_schmidt_operators(std::span<const ComplexMatrix> ops, const Tolerance& tol) {
  for (std::size_t i = 1; i < ops.size(); ++i) {
    if (!ops[i].same_shape(ops[0])) {
      throw DimensionError("gram_schmidt_operators: operator " + std::to_string(i) +
                           " has a different shape");
    }
  }
  OperatorBasis out;
  std::vector<std::vector<Complex>> raw;
  raw.reserve(ops.size());
  for (const auto& op : ops) {
    ComplexMatrix residual = op;
    std::vector<Complex> c(out.basis.size());
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < out.basis.size(); ++k) {
        const Complex proj = hs_inner(out.basis[k], residual);
        c[k] += proj;
        residual -= proj * out.basis[k];
      }
    }
    const double r = frobenius_norm(residual);
    if (r > tol.eq_tol * std::max(1.0, frobenius_norm(op))) {
      residual *= 1.0 / r;
      out.basis.push_back(std::move(residual));
      c.push_back(r);
    }
    raw.push_back(std::move(c));
  }
  out.rank = out.basis.size();
  for (auto& c : raw) c.resize(out.rank);
  out.coefficients = std::move(raw);
  return out;
}

}  // namespace covgraph
