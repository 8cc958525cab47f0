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

#include "covgraph/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covgraph/error.hpp"

namespace covgraph {

namespace {

std::string shape_string(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": shape mismatch " + shape_string(a) + " vs " +
                         shape_string(b));
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!(eq_tol >= 0.0) || !(eig_tol >= 0.0) || !(degeneracy_tol >= 0.0)) {
    throw PreconditionError("tolerances must be non-negative");
  }
  if (eq_tol < eig_tol) {
    throw PreconditionError("eq_tol must be >= eig_tol");
  }
}

bool Tolerance::close(double x, double y) const {
  return std::abs(x - y) <= eq_tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

bool Tolerance::close(Complex x, Complex y) const {
  return std::abs(x - y) <= eq_tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

ComplexMatrix ComplexMatrix::column_vector(std::span<const Complex> values) {
  return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix d(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) d(i, i) = values[i];
  return d;
}

ComplexMatrix ComplexMatrix::basis_vector(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("basis index out of range");
  ComplexMatrix e(n, 1);
  e(index, 0) = 1.0;
  return e;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  ComplexMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: inner dimensions differ " + shape_string(a) + " * " +
                         shape_string(b));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix " + shape_string(a));
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_norm(const ComplexMatrix& a) {
  double m = 0.0;
  for (Complex z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Complex z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  Complex s{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::conj(ea[i]) * eb[i];
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

ComplexMatrix outer(const ComplexMatrix& v) {
  if (v.cols() != 1) throw DimensionError("outer: expected a column vector");
  return v * adjoint(v);
}

bool is_projection(const ComplexMatrix& p, const Tolerance& tol) {
  if (!p.is_square()) return false;
  return max_norm(p - adjoint(p)) <= tol.eq_tol && max_norm(p * p - p) <= tol.eq_tol;
}

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) return false;
  return tol.negligible(max_norm(a - adjoint(a)), max_norm(a));
}

bool is_unitary(const ComplexMatrix& u, const Tolerance& tol) {
  if (!u.is_square()) return false;
  return tol.negligible(max_norm(adjoint(u) * u - ComplexMatrix::identity(u.rows())), 1.0);
}

}  // namespace covgraph
