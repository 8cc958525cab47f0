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

// Acceptance suite. Prints one [PASS]/[FAIL] line per numbered criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 7   run one criterion
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covgraph/anticlique.hpp"
#include "covgraph/circle_rep.hpp"
#include "covgraph/constructions.hpp"
#include "covgraph/graph.hpp"
#include "covgraph/linalg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using covgraph::CircleRep;
using covgraph::Complex;
using covgraph::ComplexMatrix;
using covgraph::OperatorGraph;
using covgraph::QParams;

constexpr double kPi = std::numbers::pi;
const double kBalancedTau = 1.0 / (2.0 * std::sqrt(2.0));

// Tolerances, one per quantity checked.
constexpr double kIdempotenceTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kAnticliqueTol = 1e-10;
constexpr double kSubspaceTol = 1e-8;
constexpr double kRatioTol = 1e-9;
constexpr double kQuadratureTol = 1e-12;
constexpr double kQuadratureGap = 1e-6;
constexpr double kPinchTol = 1e-12;
constexpr double kGramTol = 1e-12;
constexpr double kSchmidtTol = 1e-10;
constexpr double kEntropyTol = 1e-9;
constexpr double kPrintedLeakage = 1e-3;
constexpr double kEigenvectorTol = 1e-12;
constexpr double kCorrectedSchmidtTol = 1e-9;
constexpr double kMergedWitness = 1e-3;
constexpr double kIdentityTol = 1e-10;

constexpr std::uint64_t kSeed = 20260517;

struct Outcome {
  bool passed = true;
  std::ostringstream summary;
  std::vector<std::string> notes;

  void require(bool ok) { passed = passed && ok; }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const std::vector<double>& family_taus() {
  static const std::vector<double> taus{0.05, 0.1, 0.25, kBalancedTau, 0.45};
  return taus;
}

std::vector<QParams> family_grid() {
  oracle::Random rng(kSeed);
  std::vector<QParams> out;
  for (double tau : family_taus()) {
    for (int t = 0; t < 5; ++t) {
      out.push_back({tau, rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi),
                     rng.integer(-2, 2)});
    }
  }
  return out;
}

ComplexMatrix complement(const ComplexMatrix& p) {
  return oracle::lincomb(1.0, oracle::eye(p.rows()), -1.0, p);
}

// Projection family: idempotence, trace and closure under complement.
void family(Outcome& out) {
  double worst_idem = 0.0;
  double worst_trace = 0.0;
  std::size_t redetected = 0;
  const auto grid = family_grid();
  for (const QParams& p : grid) {
    const ComplexMatrix q = covgraph::build_q(p);
    worst_idem = std::max(worst_idem, oracle::max_abs_diff(oracle::mul(q, q), q));
    worst_trace = std::max(worst_trace, std::abs(oracle::tr(q) - 2.0));
    const auto c = covgraph::detect_family(complement(q));
    if (c && oracle::max_abs_diff(covgraph::build_q(*c), complement(q)) <= kIdempotenceTol) ++redetected;
  }
  out.require(worst_idem <= kIdempotenceTol);
  out.require(worst_trace <= kTraceTol);
  out.require(redetected == grid.size());
  out.summary << grid.size() << " members; max |Q^2-Q|=" << sci(worst_idem)
              << " max |TrQ-2|=" << sci(worst_trace) << " complements re-detected "
              << redetected << "/" << grid.size();
}

// P_plus and P_minus certified against the orbit span of each family member.
void anticliques(Outcome& out) {
  const CircleRep rep = fixture::two_block_rep();
  const ComplexMatrix p_plus = covgraph::two_block_p_plus();
  double worst = 0.0;
  std::size_t ok = 0;
  std::size_t total = 0;
  for (const QParams& p : family_grid()) {
    const OperatorGraph g = covgraph::orbit_span_analytic(rep, covgraph::build_q(p));
    for (const ComplexMatrix& proj : {p_plus, complement(p_plus)}) {
      const auto v = covgraph::verify_anticlique(proj, g);
      worst = std::max(worst, v.max_residual);
      ++total;
      if (v.passed && v.max_residual <= kAnticliqueTol && v.code_dimension == 2) ++ok;
    }
  }
  out.require(ok == total);
  out.summary << ok << "/" << total << " verdicts pass with code dimension 2; max residual=" << sci(worst);
}

// Span dimension for seeds I + S0 with random off-block S0.
void span_dimension(Outcome& out) {
  oracle::Random rng(kSeed + 3);
  const CircleRep rep = fixture::two_block_rep();
  const covgraph::Tolerance tol;
  double worst = 0.0;
  std::size_t ok = 0;
  const std::size_t trials = 10;
  for (std::size_t t = 0; t < trials; ++t) {
    ComplexMatrix m0 = oracle::eye(4);
    bool general = t % 2 == 1;
    if (general) {
      m0 = oracle::lincomb(1.0, m0, 1.0, fixture::off_block(rng.matrix(2, 2), rng.matrix(2, 2)));
    } else {
      m0 = fixture::hermitian_seed(rng, 1.0);
    }
    const OperatorGraph analytic = covgraph::orbit_span_analytic(rep, m0, tol, general);
    const OperatorGraph sampled = covgraph::orbit_span_sampled(rep, m0, 5, tol);
    const double distance = covgraph::subspace_distance(analytic, sampled);
    worst = std::max(worst, distance);
    if (analytic.dimension() == 3 && sampled.dimension() == 3 && distance <= kSubspaceTol) ++ok;
  }
  out.require(ok == trials);
  out.summary << ok << "/" << trials
              << " seeds give analytic and sampled (N=5) dimension 3; max projector difference="
              << sci(worst);
}

// Adjoint-ratio criterion for the off-block pair.
void adjoint_ratio(Outcome& out) {
  oracle::Random rng(kSeed + 4);
  const CircleRep rep = fixture::two_block_rep();
  const covgraph::Tolerance tol;
  double worst = 0.0;
  std::size_t recovered = 0;
  std::size_t rejected = 0;
  const std::size_t trials = 8;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix f = rng.matrix(2, 2);
    const Complex h = rng.gaussian();
    const ComplexMatrix seed = oracle::lincomb(
        1.0, oracle::eye(4), 1.0, fixture::off_block(f, oracle::lincomb(h, oracle::dagger(f), 0.0, f)));
    const auto found = covgraph::find_adjoint_ratio(rep, seed, tol);
    if (found) {
      worst = std::max(worst, std::abs(*found - h));
      if (std::abs(*found - h) <= kRatioTol) ++recovered;
    }

    const ComplexMatrix fd = oracle::dagger(f);
    const ComplexMatrix g = rng.matrix(2, 2);
    const ComplexMatrix g_perp = oracle::lincomb(1.0, g, -oracle::hs(fd, g) / oracle::hs(fd, fd), fd);
    const ComplexMatrix skew = oracle::lincomb(1.0, oracle::eye(4), 1.0, fixture::off_block(f, g_perp));
    const bool none = !covgraph::find_adjoint_ratio(rep, skew, tol).has_value();
    const auto system = covgraph::is_operator_system(covgraph::orbit_span_analytic(rep, skew, tol, true), tol);
    if (none && !system.adjoint_closed) ++rejected;
  }
  out.require(recovered == trials);
  out.require(rejected == trials);
  out.summary << "h recovered " << recovered << "/" << trials << " (max |h'-h|=" << sci(worst)
              << "); orthogonal off-blocks rejected and not adjoint-closed " << rejected << "/" << trials;
}

// Quadrature against pinching for the Bell representation.
void quadrature(Outcome& out) {
  oracle::Random rng(kSeed + 5);
  double worst_exact = 0.0;
  double best_gap_d = 0.0;
  double best_gap_below = std::numeric_limits<double>::infinity();
  for (std::size_t d = 2; d <= 5; ++d) {
    const CircleRep rep = covgraph::bell_rep(d);
    const std::size_t n = d * d;
    for (int t = 0; t < 3; ++t) {
      const ComplexMatrix a = rng.matrix(n, n);
      worst_exact = std::max(
          worst_exact, oracle::max_abs_diff(covgraph::haar_average(rep, a, 2 * d + 1), covgraph::pinch(rep, a)));
    }
    // Witness coupling frequencies 1 and d.
    const ComplexMatrix witness =
        oracle::mul(covgraph::bell_state(d, 1, 1), oracle::dagger(covgraph::bell_state(d, d, 1)));
    std::vector<ComplexMatrix> candidates{witness};
    for (int t = 0; t < 3; ++t) candidates.push_back(rng.matrix(n, n));
    double gap_d = 0.0;
    double gap_below = 0.0;
    for (const auto& a : candidates) {
      const ComplexMatrix pinched = covgraph::pinch(rep, a);
      gap_d = std::max(gap_d, oracle::max_abs_diff(covgraph::haar_average(rep, a, d), pinched));
      gap_below = std::max(gap_below, oracle::max_abs_diff(covgraph::haar_average(rep, a, d - 1), pinched));
    }
    best_gap_d = std::max(best_gap_d, gap_d);
    best_gap_below = std::min(best_gap_below, gap_below);
  }
  const bool exact_ok = worst_exact <= kQuadratureTol;
  const bool gap_ok = best_gap_d > kQuadratureGap;
  out.require(exact_ok);
  out.require(gap_ok);
  out.summary << "N=2d+1: max |avg - pinch|=" << sci(worst_exact) << (exact_ok ? " ok" : " too large")
              << "; N=d: largest |avg - pinch| over witnesses=" << sci(best_gap_d)
              << (gap_ok ? " ok" : " (needs > 1e-6)");
  out.notes.push_back("N=d-1: smallest over d of the largest |avg - pinch|=" + sci(best_gap_below));
}

// Pinching of Q_j and certification of every P_s.
void bell_graph(Outcome& out) {
  double worst_pinch = 0.0;
  double worst_residual = 0.0;
  std::size_t ok = 0;
  std::size_t total = 0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const CircleRep rep = covgraph::bell_rep(d);
    const ComplexMatrix target = oracle::lincomb(1.0 / static_cast<double>(d), oracle::eye(d * d), 0.0,
                                                 oracle::eye(d * d));
    for (std::size_t j = 1; j <= d; ++j) {
      const ComplexMatrix qj = covgraph::q_j(d, j);
      const double pinch_err = oracle::max_abs_diff(covgraph::pinch(rep, qj), target);
      worst_pinch = std::max(worst_pinch, pinch_err);
      const OperatorGraph g = covgraph::orbit_span_analytic(rep, qj);
      bool all = pinch_err <= kPinchTol;
      for (const ComplexMatrix& ps : rep.projections()) {
        const auto v = covgraph::verify_anticlique(ps, g);
        worst_residual = std::max(worst_residual, v.max_residual);
        all = all && v.passed && v.max_residual <= kAnticliqueTol && v.code_dimension == d;
      }
      ++total;
      if (all) ++ok;
    }
  }
  out.require(ok == total);
  out.summary << ok << "/" << total << " (d, j) pairs; max |pinch(Q_j) - I/d|=" << sci(worst_pinch)
              << " max anticlique residual=" << sci(worst_residual);
}

// Orthonormality and maximal entanglement of the Bell basis.
void bell_basis(Outcome& out) {
  double worst_gram = 0.0;
  double worst_coeff = 0.0;
  bool counts_ok = true;
  for (std::size_t d = 2; d <= 6; ++d) {
    std::vector<ComplexMatrix> states;
    for (std::size_t s = 1; s <= d; ++s) {
      for (std::size_t n = 1; n <= d; ++n) states.push_back(covgraph::bell_state(d, s, n));
    }
    worst_gram = std::max(worst_gram, oracle::max_abs_diff(oracle::gram(states), oracle::eye(d * d)));
    const double expected = 1.0 / std::sqrt(static_cast<double>(d));
    for (const auto& psi : states) {
      const auto sd = covgraph::schmidt(psi, d, d);
      counts_ok = counts_ok && sd.coefficients.size() == d;
      for (double c : sd.coefficients) worst_coeff = std::max(worst_coeff, std::abs(c - expected));
    }
  }
  out.require(worst_gram <= kGramTol);
  out.require(worst_coeff <= kSchmidtTol);
  out.require(counts_ok);
  out.summary << "d=2..6; max |Gram - I|=" << sci(worst_gram) << " max |coefficient - 1/sqrt(d)|="
              << sci(worst_coeff);
}

double binary_entropy(double w) {
  double h = 0.0;
  for (double x : {w, 1.0 - w}) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

// Entropy of the printed Schmidt weights (1 - 4 tau^2, 4 tau^2).
void printed_entropy(Outcome& out) {
  std::ostringstream detail;
  for (double tau : {0.1, 0.2, 0.3}) {
    const auto report = covgraph::entanglement_report({tau, 0.3, 1.1, 2.0, 0});
    const double h = report.vectors.at(0).printed_entropy_bits.value();
    const double reference = binary_entropy(4.0 * tau * tau);
    out.require(h < 1.0 && std::abs(h - reference) <= kEntropyTol);
    detail << " H(" << tau << ")=" << sci(h);
  }
  const auto balanced = covgraph::entanglement_report({kBalancedTau, 0.3, 1.1, 2.0, 0});
  const double h = balanced.vectors.at(0).printed_entropy_bits.value();
  out.require(std::abs(h - 1.0) <= kEntropyTol);
  out.summary << "printed entropy" << detail.str() << "; at tau=1/(2 sqrt 2) |H - 1|=" << sci(std::abs(h - 1.0));
}

ComplexMatrix column_of(const ComplexMatrix& m, std::size_t j) {
  ComplexMatrix v(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) v(i, 0) = m(i, j);
  return v;
}

// Printed spanning vectors against the corrected column vectors.
void spanning_vectors(Outcome& out) {
  const QParams probe{0.25, 0.4, 1.3, 2.2, 1};
  const auto printed = covgraph::printed_spanning_vectors(probe);
  const std::vector<ComplexMatrix> printed_list{printed.xi_q, printed.eta_q, printed.xi_complement,
                                                printed.eta_complement};
  const std::size_t printed_rank = covgraph::gram_rank(printed_list);
  const std::size_t oracle_rank = oracle::rank(printed_list, 1e-10);
  const double leakage = oracle::norm2(oracle::mul(covgraph::build_q(probe), printed.xi_complement));
  out.require(printed_rank == 3 && oracle_rank == 3);
  out.require(leakage > kPrintedLeakage);

  double worst_vec = 0.0;
  double worst_schmidt = 0.0;
  const ComplexMatrix e_plus = column_of(oracle::eye(4), 0);
  const double half = 1.0 / std::sqrt(2.0);
  for (const QParams& p : family_grid()) {
    const ComplexMatrix q = covgraph::build_q(p);
    const auto v = covgraph::q_vectors(q);
    worst_vec = std::max(worst_vec, oracle::max_abs_diff(oracle::mul(q, v.xi_q), v.xi_q));
    worst_vec = std::max(worst_vec, oracle::max_abs_diff(oracle::mul(q, v.xi_complement),
                                                         ComplexMatrix(4, 1)));
    const auto id = covgraph::tensor_identification(v, true);
    const ComplexMatrix pulled = oracle::mul(oracle::dagger(id.map), e_plus);
    const auto sd = covgraph::schmidt(pulled, 2, 2);
    for (double c : sd.coefficients) worst_schmidt = std::max(worst_schmidt, std::abs(c - half));
    const ComplexMatrix rho = oracle::reduced_first(pulled, 2, 2);
    worst_schmidt = std::max(worst_schmidt, oracle::max_abs_diff(rho, oracle::lincomb(0.5, oracle::eye(2), 0.0,
                                                                                      oracle::eye(2))));
  }
  out.require(worst_vec <= kEigenvectorTol);
  out.require(worst_schmidt <= kCorrectedSchmidtTol);
  out.summary << "printed Gram rank " << printed_rank << " (oracle " << oracle_rank << "), |Q xi_(I-Q)|="
              << sci(leakage) << "; corrected max residual=" << sci(worst_vec)
              << " max |Schmidt(T^* e+) - 1/sqrt 2|=" << sci(worst_schmidt);
}

// Merged spectrum for frequencies (1, -1) and the failing identity candidate.
void merged_spectra(Outcome& out) {
  const std::vector<int> freqs{1, -1};
  const auto merged = covgraph::scan_merged_spectra(freqs);
  const bool only_pi = merged.size() == 1 && std::abs(merged[0].phi - kPi) <= 1e-15 &&
                       merged[0].partition.size() == 1 && merged[0].partition[0].size() == 2;
  out.require(only_pi);

  oracle::Random rng(kSeed + 10);
  const CircleRep rep = fixture::two_block_rep();
  const std::vector<double> phis{kPi};
  double weakest = std::numeric_limits<double>::infinity();
  std::size_t failed_with_witness = 0;
  const std::size_t trials = 6;
  for (std::size_t t = 0; t < trials; ++t) {
    const OperatorGraph g = covgraph::orbit_span_analytic(rep, fixture::hermitian_seed(rng, 1.0));
    if (g.dimension() != 3) continue;
    const auto verdicts = covgraph::anticliques_from_spectrum(rep, g, phis);
    if (verdicts.size() != 1) continue;
    const auto& v = verdicts[0].verdict;
    const bool identity = v.code_dimension == 4;
    weakest = std::min(weakest, v.max_residual);
    if (identity && !v.passed && v.max_residual > kMergedWitness && v.witness) ++failed_with_witness;
  }
  out.require(failed_with_witness == trials);
  out.summary << "merged angles found " << merged.size() << (only_pi ? " (phi = pi, full merge)" : "")
              << "; identity rejected with witness on " << failed_with_witness << "/" << trials
              << " graphs, smallest residual=" << sci(weakest);
}

ComplexMatrix pinch_free_hermitian(oracle::Random& rng, const CircleRep& rep) {
  const ComplexMatrix x = rng.hermitian(rep.dim());
  return oracle::lincomb(1.0, x, -1.0, covgraph::pinch(rep, x));
}

// Identity and adjoint closure for graphs of pinch-free perturbations of I/d.
void operator_system(Outcome& out) {
  oracle::Random rng(kSeed + 11);
  double worst_identity = 0.0;
  std::size_t ok = 0;
  std::size_t total = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    const CircleRep rep = covgraph::bell_rep(d);
    for (int t = 0; t < 3; ++t) {
      ComplexMatrix a0 = pinch_free_hermitian(rng, rep);
      const auto spectrum = covgraph::eig_hermitian(a0);
      double radius = 0.0;
      for (double lambda : spectrum.eigenvalues) radius = std::max(radius, std::abs(lambda));
      a0 *= Complex(1.0 / (2.0 * static_cast<double>(d) * radius));
      const ComplexMatrix m0 =
          oracle::lincomb(1.0 / static_cast<double>(d), oracle::eye(d * d), 1.0, a0);
      const auto system = covgraph::is_operator_system(covgraph::orbit_span_analytic(rep, m0));
      worst_identity = std::max(worst_identity, system.identity_residual);
      ++total;
      if (system.contains_identity && system.identity_residual <= kIdentityTol && system.adjoint_closed) ++ok;
    }
  }
  out.require(ok == total);
  out.summary << ok << "/" << total << " graphs contain I and are adjoint-closed; max identity residual="
              << sci(worst_identity);
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "projection family", family},
      {2, "P+/P- anticliques", anticliques},
      {3, "orbit span dimension", span_dimension},
      {4, "adjoint ratio", adjoint_ratio},
      {5, "quadrature vs pinching", quadrature},
      {6, "Bell graph anticliques", bell_graph},
      {7, "Bell basis", bell_basis},
      {8, "printed entropy", printed_entropy},
      {9, "spanning vectors", spanning_vectors},
      {10, "merged spectra", merged_spectra},
      {11, "operator system axioms", operator_system},
  };
  return all;
}

bool run(const Criterion& c) {
  Outcome out;
  try {
    c.run(out);
  } catch (const std::exception& e) {
    out.passed = false;
    out.summary << "exception: " << e.what();
  }
  std::printf("[%s] %2d %-24s %s\n", out.passed ? "PASS" : "FAIL", c.number, c.title, out.summary.str().c_str());
  for (const auto& note : out.notes) std::printf("       %-27s %s\n", "info", note.c_str());
  return out.passed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covgraph acceptance suite"};
  std::optional<int> only;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  std::size_t failures = 0;
  for (const auto& c : criteria()) {
    if (only && *only != c.number) continue;
    if (!run(c)) ++failures;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
