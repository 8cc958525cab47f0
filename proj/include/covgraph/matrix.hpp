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

// Dense complex matrices and the tolerance bundle shared by every numerical
// check in the library. Vectors are n x 1 matrices.

#ifndef COVGRAPH_MATRIX_HPP
#define COVGRAPH_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace covgraph {

using Complex = std::complex<double>;

/// Tolerances used by equality, eigen-convergence and degeneracy decisions.
struct Tolerance {
  double eq_tol = 1e-10;
  double eig_tol = 1e-12;
  double degeneracy_tol = 1e-8;

  /// Throws PreconditionError unless all values are non-negative and
  /// eq_tol >= eig_tol.
  void validate() const;

  /// |x - y| <= eq_tol * (1 + max(|x|, |y|)).
  bool close(double x, double y) const;
  bool close(Complex x, Complex y) const;

  /// residual <= eq_tol * (1 + scale).
  bool negligible(double residual, double scale) const {
    return residual <= eq_tol * (1.0 + scale);
  }
};

/// Row-major dense complex matrix with positive dimensions.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix column_vector(std::span<const Complex> values);
  /// Diagonal matrix from the given values.
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// Standard basis vector e_index in C^n.
  static ComplexMatrix basis_vector(std::size_t n, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix column(std::size_t j) const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
/// Largest entry modulus.
double max_norm(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// Hilbert-Schmidt inner product Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v><v| for a column vector v.
ComplexMatrix outer(const ComplexMatrix& v);

/// True iff ||P - P^dagger||_max <= eq_tol and ||P^2 - P||_max <= eq_tol.
bool is_projection(const ComplexMatrix& p, const Tolerance& tol = {});

/// ||A - A^dagger||_max within eq_tol * (1 + ||A||_max).
bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = {});

/// ||U^dagger U - I||_max within eq_tol * 2.
bool is_unitary(const ComplexMatrix& u, const Tolerance& tol = {});

}  // namespace covgraph

#endif  // COVGRAPH_MATRIX_HPP
