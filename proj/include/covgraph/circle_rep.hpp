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

// Unitary representations of the circle group U_phi = sum_j e^{i s_j phi} P_j,
// the pinching onto their fixed-point algebra and its finite quadrature.

#ifndef COVGRAPH_CIRCLE_REP_HPP
#define COVGRAPH_CIRCLE_REP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "covgraph/matrix.hpp"

namespace covgraph {

class CircleRep {
 public:
  /// Pairs integer frequencies with projections. Projections that share a
  /// frequency are summed into one. Shapes are checked here; the projection
  /// invariants are left to rep_validate so malformed input can be reported.
  static CircleRep make(std::vector<int> freqs, std::vector<ComplexMatrix> projections);

  std::size_t dim() const { return dim_; }
  std::span<const int> freqs() const { return freqs_; }
  std::span<const ComplexMatrix> projections() const { return projections_; }
  std::size_t size() const { return freqs_.size(); }

  int max_abs_freq() const;
  /// Largest |s_j - s_k|.
  int max_freq_spread() const;
  std::string describe() const;

 private:
  CircleRep(std::size_t dim, std::vector<int> freqs, std::vector<ComplexMatrix> projections)
      : dim_(dim), freqs_(std::move(freqs)), projections_(std::move(projections)) {}

  std::size_t dim_;
  std::vector<int> freqs_;
  std::vector<ComplexMatrix> projections_;
};

struct RepViolation {
  std::string invariant;  // "projection", "orthogonality" or "completeness"
  std::string detail;
  double residual = 0.0;
};

struct RepValidation {
  std::vector<RepViolation> violations;
  bool ok() const { return violations.empty(); }
};

RepValidation rep_validate(const CircleRep& rep, const Tolerance& tol = {});

/// U_phi. Throws PreconditionError when the representation is invalid.
ComplexMatrix evaluate(const CircleRep& rep, double phi, const Tolerance& tol = {});

/// sum_j P_j A P_j.
ComplexMatrix pinch(const CircleRep& rep, const ComplexMatrix& a);

/// (1/N) sum_k U_{2 pi k/N} A U_{2 pi k/N}^dagger. Equal to pinch() whenever
/// N > 2 max|s_j|.
ComplexMatrix haar_average(const CircleRep& rep, const ComplexMatrix& a, std::size_t n_samples);

/// Smallest N satisfying the exactness threshold above.
std::size_t exact_quadrature_size(const CircleRep& rep);

/// U_phi = e^{i phi} P_+ + e^{-i phi} (I - P_+).
CircleRep rep_two_block(const ComplexMatrix& p_plus, const Tolerance& tol = {});

namespace detail {
// U_phi without validating the representation.
ComplexMatrix evaluate_unchecked(const CircleRep& rep, double phi);
}  // namespace detail

}  // namespace covgraph

#endif  // COVGRAPH_CIRCLE_REP_HPP
