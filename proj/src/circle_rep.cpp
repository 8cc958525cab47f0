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

#include "covgraph/circle_rep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

#include "covgraph/error.hpp"

namespace covgraph {

CircleRep CircleRep::make(std::vector<int> freqs, std::vector<ComplexMatrix> projections) {
  if (freqs.size() != projections.size()) {
    throw DimensionError("circle rep: " + std::to_string(freqs.size()) + " frequencies but " +
                         std::to_string(projections.size()) + " projections");
  }
  if (freqs.empty()) throw DimensionError("circle rep: no projections");
  const std::size_t dim = projections.front().rows();
  for (const auto& p : projections) {
    if (!p.is_square() || p.rows() != dim) {
      throw DimensionError("circle rep: projections must all be " + std::to_string(dim) + "x" +
                           std::to_string(dim));
    }
  }
  std::vector<int> merged_freqs;
  std::vector<ComplexMatrix> merged;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    auto it = std::find(merged_freqs.begin(), merged_freqs.end(), freqs[i]);
    if (it == merged_freqs.end()) {
      merged_freqs.push_back(freqs[i]);
      merged.push_back(std::move(projections[i]));
    } else {
      merged[static_cast<std::size_t>(it - merged_freqs.begin())] += projections[i];
    }
  }
  return CircleRep(dim, std::move(merged_freqs), std::move(merged));
}

int CircleRep::max_abs_freq() const {
  int m = 0;
  for (int s : freqs_) m = std::max(m, std::abs(s));
  return m;
}

int CircleRep::max_freq_spread() const {
  const auto [lo, hi] = std::minmax_element(freqs_.begin(), freqs_.end());
  return *hi - *lo;
}

std::string CircleRep::describe() const {
  std::ostringstream os;
  os << "circle-rep dim=" << dim_ << " freqs=[";
  for (std::size_t i = 0; i < freqs_.size(); ++i) os << (i ? "," : "") << freqs_[i];
  os << "]";
  return os.str();
}

RepValidation rep_validate(const CircleRep& rep, const Tolerance& tol) {
  RepValidation report;
  const auto projections = rep.projections();
  for (std::size_t j = 0; j < projections.size(); ++j) {
    const auto& p = projections[j];
    const double residual = std::max(max_norm(p - adjoint(p)), max_norm(p * p - p));
    if (residual > tol.eq_tol) {
      report.violations.push_back(
          {"projection", "entry " + std::to_string(j) + " (frequency " +
                             std::to_string(rep.freqs()[j]) + ") is not a projection",
           residual});
    }
  }
  for (std::size_t j = 0; j < projections.size(); ++j) {
    for (std::size_t k = j + 1; k < projections.size(); ++k) {
      const double residual = max_norm(projections[j] * projections[k]);
      if (residual > tol.eq_tol) {
        report.violations.push_back({"orthogonality",
                                     "entries " + std::to_string(j) + " and " +
                                         std::to_string(k) + " are not orthogonal",
                                     residual});
      }
    }
  }
  ComplexMatrix sum(rep.dim(), rep.dim());
  for (const auto& p : projections) sum += p;
  const double residual = max_norm(sum - ComplexMatrix::identity(rep.dim()));
  if (residual > tol.eq_tol) {
    report.violations.push_back({"completeness", "projections do not sum to the identity", residual});
  }
  return report;
}

namespace detail {

ComplexMatrix evaluate_unchecked(const CircleRep& rep, double phi) {
  ComplexMatrix u(rep.dim(), rep.dim());
  for (std::size_t j = 0; j < rep.size(); ++j) {
    u += std::polar(1.0, rep.freqs()[j] * phi) * rep.projections()[j];
  }
  return u;
}

}  // namespace detail

ComplexMatrix evaluate(const CircleRep& rep, double phi, const Tolerance& tol) {
  const RepValidation report = rep_validate(rep, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw PreconditionError("evaluate: invalid representation, " + v.invariant + " violation (" +
                            v.detail + ")");
  }
  return detail::evaluate_unchecked(rep, phi);
}

namespace {

void require_rep_shape(const CircleRep& rep, const ComplexMatrix& a, const char* what) {
  if (!a.is_square() || a.rows() != rep.dim()) {
    throw DimensionError(std::string(what) + ": operator must be " + std::to_string(rep.dim()) +
                         "x" + std::to_string(rep.dim()));
  }
}

}  // namespace

ComplexMatrix pinch(const CircleRep& rep, const ComplexMatrix& a) {
  require_rep_shape(rep, a, "pinch");
  ComplexMatrix out(rep.dim(), rep.dim());
  for (const auto& p : rep.projections()) out += p * a * p;
  return out;
}

ComplexMatrix haar_average(const CircleRep& rep, const ComplexMatrix& a, std::size_t n_samples) {
  require_rep_shape(rep, a, "haar_average");
  if (n_samples == 0) throw PreconditionError("haar_average: need at least one sample");
  ComplexMatrix out(rep.dim(), rep.dim());
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n_samples);
    const ComplexMatrix u = detail::evaluate_unchecked(rep, phi);
    out += u * a * adjoint(u);
  }
  out *= 1.0 / static_cast<double>(n_samples);
  return out;
}

std::size_t exact_quadrature_size(const CircleRep& rep) {
  return 2 * static_cast<std::size_t>(rep.max_abs_freq()) + 1;
}

CircleRep rep_two_block(const ComplexMatrix& p_plus, const Tolerance& tol) {
  if (!is_projection(p_plus, tol)) {
    throw PreconditionError("rep_two_block: P_plus is not an orthogonal projection");
  }
  ComplexMatrix p_minus = ComplexMatrix::identity(p_plus.rows()) - p_plus;
  return CircleRep::make({1, -1}, {p_plus, std::move(p_minus)});
}

}  // namespace covgraph
