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

#include "covgraph/anticlique.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "covgraph/error.hpp"
#include "covgraph/linalg.hpp"

namespace covgraph {

AnticliqueVerdict verify_anticlique(const ComplexMatrix& p, std::span<const ComplexMatrix> ops,
                                    const Tolerance& tol) {
  if (!is_projection(p, tol)) {
    throw PreconditionError("verify_anticlique: candidate is not an orthogonal projection");
  }
  const double tr = trace(p).real();
  const auto rank = static_cast<std::size_t>(std::max(0.0, std::round(tr)));
  if (rank == 0) throw PreconditionError("verify_anticlique: candidate projection is zero");

  AnticliqueVerdict verdict;
  verdict.code_dimension = rank;
  std::size_t worst = 0;
  ComplexMatrix worst_residual = p;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!ops[k].same_shape(p)) {
      throw DimensionError("verify_anticlique: operator " + std::to_string(k) +
                           " does not match the projection");
    }
    const ComplexMatrix pap = p * ops[k] * p;
    const Complex c = trace(pap) / tr;
    ComplexMatrix residual = pap - c * p;
    const double r = max_norm(residual);
    verdict.constants.push_back(c);
    verdict.residuals.push_back(r);
    if (k == 0 || r > verdict.max_residual) {
      verdict.max_residual = r;
      worst = k;
      worst_residual = std::move(residual);
    }
  }
  if (verdict.max_residual > tol.eq_tol) {
    verdict.witness = AnticliqueWitness{worst, fingerprint(worst_residual), verdict.max_residual};
  }
  verdict.passed = verdict.max_residual <= tol.eq_tol && verdict.code_dimension >= 2;
  return verdict;
}

AnticliqueVerdict verify_anticlique(const ComplexMatrix& p, const OperatorGraph& graph,
                                    const Tolerance& tol) {
  if (!p.is_square() || p.rows() != graph.dim) {
    throw DimensionError("verify_anticlique: projection does not match graph dimension");
  }
  return verify_anticlique(p, std::span<const ComplexMatrix>(graph.basis), tol);
}

std::vector<SpectralVerdict> anticliques_from_spectrum(const CircleRep& rep,
                                                       const OperatorGraph& graph,
                                                       std::span<const double> phis,
                                                       const Tolerance& tol) {
  if (graph.dim != rep.dim()) {
    throw DimensionError("anticliques_from_spectrum: graph and representation dimensions differ");
  }
  std::vector<SpectralVerdict> out;
  for (double phi : phis) {
    const ComplexMatrix u = evaluate(rep, phi, tol);
    for (const auto& component : spectral_projections_unitary(u, tol)) {
      if (std::round(trace(component.projection).real()) < 2.0) continue;
      out.push_back({phi, component.eigenphase, verify_anticlique(component.projection, graph, tol)});
    }
  }
  return out;
}

std::vector<MergedSpectrum> scan_merged_spectra(std::span<const int> freqs) {
  int spread = 0;
  for (int a : freqs)
    for (int b : freqs) spread = std::max(spread, a - b);

  std::vector<MergedSpectrum> out;
  for (int q = 2; q <= spread; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      // e^{2 pi i s p / q} depends only on s mod q since gcd(p, q) = 1.
      std::vector<std::vector<std::size_t>> classes;
      std::vector<int> residues;
      bool merged = false;
      for (std::size_t j = 0; j < freqs.size(); ++j) {
        const int r = ((freqs[j] % q) + q) % q;
        auto it = std::find(residues.begin(), residues.end(), r);
        if (it == residues.end()) {
          residues.push_back(r);
          classes.push_back({j});
        } else {
          classes[static_cast<std::size_t>(it - residues.begin())].push_back(j);
          merged = true;
        }
      }
      if (merged) {
        out.push_back({p, q, 2.0 * std::numbers::pi * p / q, std::move(classes)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MergedSpectrum& a, const MergedSpectrum& b) {
    return static_cast<long long>(a.numerator) * b.denominator <
           static_cast<long long>(b.numerator) * a.denominator;
  });
  return out;
}

}  // namespace covgraph
