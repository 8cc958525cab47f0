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

#ifndef COVGRAPH_LINALG_HPP
#define COVGRAPH_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "covgraph/matrix.hpp"

namespace covgraph {

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm is
/// at most eig_tol * ||A||_F; gives up with NumericalError after 100 sweeps.
/// Throws PreconditionError for non-Hermitian input.
HermitianEigen eig_hermitian(const ComplexMatrix& a, const Tolerance& tol = {});

struct SpectralComponent {
  double eigenphase;  // in [0, 2*pi)
  ComplexMatrix projection;
};

/// Spectral projections of a unitary, grouped by eigenphase (circular
/// distance <= degeneracy_tol). The Hermitian pair (U + U^dagger)/2 and
/// (U - U^dagger)/2i is diagonalized jointly: the first globally, the second
/// inside each degenerate block of the first. Sorted by eigenphase.
std::vector<SpectralComponent> spectral_projections_unitary(const ComplexMatrix& u,
                                                            const Tolerance& tol = {});

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, min(d_A, d_B) of them
  double entropy_bits = 0.0;
};

/// Schmidt coefficients of a unit vector in C^{d_A} (x) C^{d_B}, with the
/// lexicographic index convention v[i * d_B + k] <-> |i>|k>.
SchmidtDecomposition schmidt(const ComplexMatrix& v, std::size_t dim_a, std::size_t dim_b,
                             const Tolerance& tol = {});

/// -sum w log2 w over the given probability weights, with 0 log 0 = 0.
double entropy_bits(std::span<const double> weights);

struct OperatorBasis {
  std::vector<ComplexMatrix> basis;  // HS-orthonormal
  std::size_t rank = 0;
  /// coefficients[i][k] = <basis_k, ops_i>; op_i ~= sum_k coefficients[i][k] basis_k.
  std::vector<std::vector<Complex>> coefficients;
};

/// Modified Gram-Schmidt over operators with the Hilbert-Schmidt inner product
/// and one re-orthogonalization pass. An input whose residual norm is at most
/// eq_tol * max(1, ||op||_F) is treated as dependent.
OperatorBasis gram_schmidt_operators(std::span<const ComplexMatrix> ops,
                                     const Tolerance& tol = {});

}  // namespace covgraph

#endif  // COVGRAPH_LINALG_HPP
