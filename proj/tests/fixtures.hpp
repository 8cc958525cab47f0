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

// Shared test inputs for the two-block representation on C^4 = C^2 + C^2,
// where the first two coordinates span the range of P_plus.

#ifndef COVGRAPH_TESTS_FIXTURES_HPP
#define COVGRAPH_TESTS_FIXTURES_HPP

#include <cstddef>

#include "covgraph/circle_rep.hpp"
#include "covgraph/constructions.hpp"
#include "covgraph/matrix.hpp"
#include "oracles.hpp"

namespace fixture {

using covgraph::Complex;
using covgraph::ComplexMatrix;

// 4x4 operator whose upper-right 2x2 block is f and lower-left block is g.
inline ComplexMatrix off_block(const ComplexMatrix& f, const ComplexMatrix& g) {
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j + 2) = f(i, j);
      m(i + 2, j) = g(i, j);
    }
  }
  return m;
}

// 4x4 operator with diagonal blocks a (upper-left) and b (lower-right).
inline ComplexMatrix diag_block(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i + 2, j + 2) = b(i, j);
    }
  }
  return m;
}

inline covgraph::CircleRep two_block_rep() {
  return covgraph::rep_two_block(covgraph::two_block_p_plus());
}

// c I + S with S Hermitian off-block, rescaled so that c I + S stays positive.
inline ComplexMatrix hermitian_seed(oracle::Random& rng, double c) {
  ComplexMatrix f = rng.matrix(2, 2);
  double worst = 0.0;
  for (Complex z : f.entries()) worst = std::max(worst, std::abs(z));
  f *= Complex(0.4 * c / worst);
  return oracle::lincomb(c, oracle::eye(4), 1.0, off_block(f, oracle::dagger(f)));
}

}  // namespace fixture

#endif  // COVGRAPH_TESTS_FIXTURES_HPP
