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

// Knill-Laflamme-Viola certification: P A P = c_A P for every A in a graph.

#ifndef COVGRAPH_ANTICLIQUE_HPP
#define COVGRAPH_ANTICLIQUE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covgraph/circle_rep.hpp"
#include "covgraph/graph.hpp"
#include "covgraph/matrix.hpp"

namespace covgraph {

struct AnticliqueWitness {
  std::size_t basis_index = 0;
  std::string residual_fingerprint;
  double residual = 0.0;
};

struct AnticliqueVerdict {
  bool passed = false;
  std::vector<Complex> constants;  // c_A = Tr(PAP) / Tr(P), one per operator
  std::vector<double> residuals;   // ||PAP - c_A P||_max, one per operator
  double max_residual = 0.0;
  std::size_t code_dimension = 0;
  /// Worst operator, present when max_residual > eq_tol.
  std::optional<AnticliqueWitness> witness;
};

/// Checks P against each operator. passed <=> max_residual <= eq_tol and
/// rank(P) >= 2. Throws PreconditionError if P is not a nonzero projection.
AnticliqueVerdict verify_anticlique(const ComplexMatrix& p, std::span<const ComplexMatrix> ops,
                                    const Tolerance& tol = {});
AnticliqueVerdict verify_anticlique(const ComplexMatrix& p, const OperatorGraph& graph,
                                    const Tolerance& tol = {});

struct SpectralVerdict {
  double phi = 0.0;
  double eigenphase = 0.0;
  AnticliqueVerdict verdict;
};

/// Verdicts for every spectral projection of rank >= 2 of U_phi, phi in phis.
std::vector<SpectralVerdict> anticliques_from_spectrum(const CircleRep& rep,
                                                       const OperatorGraph& graph,
                                                       std::span<const double> phis,
                                                       const Tolerance& tol = {});

/// An angle 2 pi p / q at which some eigenphases e^{i s_j phi} coincide.
struct MergedSpectrum {
  int numerator = 0;
  int denominator = 1;
  double phi = 0.0;
  /// Classes of frequency indices with equal phase, singletons included.
  std::vector<std::vector<std::size_t>> partition;
};

/// All angles in (0, 2 pi) where at least two frequencies collide, in
/// increasing order. Collisions need q | (s_j - s_k), so q never exceeds the
/// largest frequency difference.
std::vector<MergedSpectrum> scan_merged_spectra(std::span<const int> freqs);

}  // namespace covgraph

#endif  // COVGRAPH_ANTICLIQUE_HPP
