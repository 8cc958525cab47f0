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

#include "covgraph/covgraph.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <exception>
#include <functional>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covgraph/anticlique.hpp"
#include "covgraph/circle_rep.hpp"
#include "covgraph/constructions.hpp"
#include "covgraph/error.hpp"
#include "covgraph/graph.hpp"
#include "covgraph/io.hpp"
#include "covgraph/linalg.hpp"
#include "covgraph/pipelines.hpp"
#include "covgraph/report.hpp"

struct covgraph_matrix {
  covgraph::ComplexMatrix value;
};

struct covgraph_rep {
  covgraph::CircleRep value;
};

struct covgraph_graph {
  covgraph::OperatorGraph value;
};

struct covgraph_verdict {
  covgraph::AnticliqueVerdict value;
};

namespace {

thread_local std::string last_error;

covgraph_status fail(covgraph_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename Fn>
covgraph_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return COVGRAPH_OK;
  } catch (const covgraph::DimensionError& e) {
    return fail(COVGRAPH_ERR_DIMENSION, e.what());
  } catch (const covgraph::PreconditionError& e) {
    return fail(COVGRAPH_ERR_PRECONDITION, e.what());
  } catch (const covgraph::NumericalError& e) {
    return fail(COVGRAPH_ERR_NUMERICAL, e.what());
  } catch (const covgraph::RankError& e) {
    return fail(COVGRAPH_ERR_RANK, e.what());
  } catch (const covgraph::InputError& e) {
    return fail(COVGRAPH_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COVGRAPH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COVGRAPH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COVGRAPH_ERR_INTERNAL, "unknown error");
  }
}

covgraph::Tolerance to_tolerance(const covgraph_tolerance* tol) {
  if (tol == nullptr) return {};
  covgraph::Tolerance t{tol->eq_tol, tol->eig_tol, tol->degeneracy_tol};
  t.validate();
  return t;
}

covgraph_tolerance from_tolerance(const covgraph::Tolerance& t) {
  return {t.eq_tol, t.eig_tol, t.degeneracy_tol};
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

covgraph::QParams to_params(const covgraph_qparams& p) {
  return covgraph::QParams{p.tau, p.z1, p.z2, p.z4, p.k};
}

covgraph_matrix* wrap(covgraph::ComplexMatrix m) { return new covgraph_matrix{std::move(m)}; }

#define COVGRAPH_REQUIRE(cond)                                          \
  do {                                                                  \
    if (!(cond)) return fail(COVGRAPH_ERR_NULL_ARGUMENT, "null argument: " #cond); \
  } while (0)

covgraph_status run_command(char** report, int* exit_code, covgraph_format format,
                            const std::function<covgraph::Report()>& fn) {
  *report = nullptr;
  *exit_code = 2;
  return guarded([&] {
    const covgraph::Report r = fn();
    const std::string text = format == COVGRAPH_FORMAT_TEXT
                                 ? r.to_text()
                                 : covgraph::canonical_dump(r.to_json());
    *report = dup_string(text);
    *exit_code = r.exit_code();
  });
}

}  // namespace

extern "C" {

const char* covgraph_version(void) { return "0.1.0"; }

const char* covgraph_report_schema(void) { return covgraph::kReportSchema; }

const char* covgraph_status_name(covgraph_status status) {
  switch (status) {
    case COVGRAPH_OK: return "ok";
    case COVGRAPH_ERR_DIMENSION: return "dimension error";
    case COVGRAPH_ERR_PRECONDITION: return "precondition error";
    case COVGRAPH_ERR_NUMERICAL: return "numerical error";
    case COVGRAPH_ERR_RANK: return "rank error";
    case COVGRAPH_ERR_INPUT: return "input error";
    case COVGRAPH_ERR_NULL_ARGUMENT: return "null argument";
    case COVGRAPH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* covgraph_last_error(void) { return last_error.c_str(); }

void covgraph_string_free(char* s) { std::free(s); }

void covgraph_doubles_free(double* values) { std::free(values); }

covgraph_tolerance covgraph_tolerance_default(void) { return from_tolerance({}); }

covgraph_status covgraph_tolerance_resolve(const char* env_value, const double* flag,
                                           covgraph_tolerance* out) {
  COVGRAPH_REQUIRE(out);
  return guarded([&] {
    std::optional<std::string_view> env;
    if (env_value != nullptr) env = env_value;
    std::optional<double> f;
    if (flag != nullptr) f = *flag;
    *out = from_tolerance(covgraph::resolve_tolerance(env, f));
  });
}

// ---- matrices --------------------------------------------------------------

covgraph_status covgraph_matrix_create(size_t rows, size_t cols, const double* re_im,
                                       covgraph_matrix** out) {
  COVGRAPH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::vector<covgraph::Complex> data(rows * cols);
    if (re_im != nullptr) {
      for (std::size_t i = 0; i < data.size(); ++i) data[i] = {re_im[2 * i], re_im[2 * i + 1]};
    }
    *out = wrap(covgraph::ComplexMatrix(rows, cols, std::move(data)));
  });
}

covgraph_status covgraph_matrix_from_json(const char* text, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::matrix_from_json(covgraph::parse_json(text))); });
}

covgraph_status covgraph_matrix_to_json(const covgraph_matrix* m, char** out) {
  COVGRAPH_REQUIRE(m && out);
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(covgraph::canonical_dump(covgraph::matrix_to_json(m->value))); });
}

void covgraph_matrix_free(covgraph_matrix* m) { delete m; }

size_t covgraph_matrix_rows(const covgraph_matrix* m) { return m ? m->value.rows() : 0; }

size_t covgraph_matrix_cols(const covgraph_matrix* m) { return m ? m->value.cols() : 0; }

covgraph_status covgraph_matrix_get(const covgraph_matrix* m, size_t i, size_t j, double* re,
                                    double* im) {
  COVGRAPH_REQUIRE(m && re && im);
  if (i >= m->value.rows() || j >= m->value.cols()) {
    return fail(COVGRAPH_ERR_DIMENSION, "matrix index out of range");
  }
  const covgraph::Complex z = m->value(i, j);
  *re = z.real();
  *im = z.imag();
  return COVGRAPH_OK;
}

covgraph_status covgraph_matrix_copy_data(const covgraph_matrix* m, double* re_im,
                                          size_t capacity) {
  COVGRAPH_REQUIRE(m && re_im);
  const auto entries = m->value.entries();
  if (capacity < 2 * entries.size()) return fail(COVGRAPH_ERR_DIMENSION, "buffer too small");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    re_im[2 * i] = entries[i].real();
    re_im[2 * i + 1] = entries[i].imag();
  }
  return COVGRAPH_OK;
}

covgraph_status covgraph_matrix_is_projection(const covgraph_matrix* m,
                                              const covgraph_tolerance* tol, int* result) {
  COVGRAPH_REQUIRE(m && result);
  return guarded([&] { *result = covgraph::is_projection(m->value, to_tolerance(tol)) ? 1 : 0; });
}

covgraph_status covgraph_hs_inner(const covgraph_matrix* a, const covgraph_matrix* b, double* re,
                                  double* im) {
  COVGRAPH_REQUIRE(a && b && re && im);
  return guarded([&] {
    const covgraph::Complex z = covgraph::hs_inner(a->value, b->value);
    *re = z.real();
    *im = z.imag();
  });
}

covgraph_status covgraph_eig_hermitian(const covgraph_matrix* a, const covgraph_tolerance* tol,
                                       double* eigenvalues, covgraph_matrix** eigenvectors) {
  COVGRAPH_REQUIRE(a && eigenvalues);
  if (eigenvectors != nullptr) *eigenvectors = nullptr;
  return guarded([&] {
    covgraph::HermitianEigen e = covgraph::eig_hermitian(a->value, to_tolerance(tol));
    std::copy(e.eigenvalues.begin(), e.eigenvalues.end(), eigenvalues);
    if (eigenvectors != nullptr) *eigenvectors = wrap(std::move(e.eigenvectors));
  });
}

covgraph_status covgraph_schmidt(const covgraph_matrix* v, size_t dim_a, size_t dim_b,
                                 const covgraph_tolerance* tol, double* coefficients,
                                 double* entropy_bits) {
  COVGRAPH_REQUIRE(v && coefficients);
  return guarded([&] {
    const auto s = covgraph::schmidt(v->value, dim_a, dim_b, to_tolerance(tol));
    std::copy(s.coefficients.begin(), s.coefficients.end(), coefficients);
    if (entropy_bits != nullptr) *entropy_bits = s.entropy_bits;
  });
}

// ---- circle representations -------------------------------------------------

covgraph_status covgraph_rep_create(const int* freqs, const covgraph_matrix* const* projections,
                                    size_t count, covgraph_rep** out) {
  COVGRAPH_REQUIRE(freqs && projections && out);
  *out = nullptr;
  return guarded([&] {
    std::vector<int> f(freqs, freqs + count);
    std::vector<covgraph::ComplexMatrix> p;
    p.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (projections[i] == nullptr) throw covgraph::InputError("null projection handle");
      p.push_back(projections[i]->value);
    }
    *out = new covgraph_rep{covgraph::CircleRep::make(std::move(f), std::move(p))};
  });
}

covgraph_status covgraph_rep_from_json(const char* text, covgraph_rep** out) {
  COVGRAPH_REQUIRE(text && out);
  *out = nullptr;
  return guarded(
      [&] { *out = new covgraph_rep{covgraph::rep_from_json(covgraph::parse_json(text))}; });
}

covgraph_status covgraph_rep_to_json(const covgraph_rep* rep, char** out) {
  COVGRAPH_REQUIRE(rep && out);
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(covgraph::canonical_dump(covgraph::rep_to_json(rep->value))); });
}

covgraph_status covgraph_rep_two_block(const covgraph_matrix* p_plus,
                                       const covgraph_tolerance* tol, covgraph_rep** out) {
  COVGRAPH_REQUIRE(p_plus && out);
  *out = nullptr;
  return guarded([&] {
    *out = new covgraph_rep{covgraph::rep_two_block(p_plus->value, to_tolerance(tol))};
  });
}

covgraph_status covgraph_rep_bell(size_t d, covgraph_rep** out) {
  COVGRAPH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new covgraph_rep{covgraph::bell_rep(d)}; });
}

void covgraph_rep_free(covgraph_rep* rep) { delete rep; }

size_t covgraph_rep_dim(const covgraph_rep* rep) { return rep ? rep->value.dim() : 0; }

size_t covgraph_rep_size(const covgraph_rep* rep) { return rep ? rep->value.size() : 0; }

covgraph_status covgraph_rep_projection(const covgraph_rep* rep, size_t index, int* freq,
                                        covgraph_matrix** out) {
  COVGRAPH_REQUIRE(rep && out);
  *out = nullptr;
  if (index >= rep->value.size()) return fail(COVGRAPH_ERR_DIMENSION, "projection index out of range");
  return guarded([&] {
    if (freq != nullptr) *freq = rep->value.freqs()[index];
    *out = wrap(rep->value.projections()[index]);
  });
}

covgraph_status covgraph_rep_validate(const covgraph_rep* rep, const covgraph_tolerance* tol,
                                      int* valid, char** report_json) {
  COVGRAPH_REQUIRE(rep && valid);
  if (report_json != nullptr) *report_json = nullptr;
  return guarded([&] {
    const auto v = covgraph::rep_validate(rep->value, to_tolerance(tol));
    *valid = v.ok() ? 1 : 0;
    if (report_json != nullptr) {
      covgraph::Json doc = covgraph::Json::array();
      for (const auto& violation : v.violations) {
        doc.push_back({{"invariant", violation.invariant},
                       {"detail", violation.detail},
                       {"residual", violation.residual}});
      }
      *report_json = dup_string(covgraph::canonical_dump(doc));
    }
  });
}

covgraph_status covgraph_rep_evaluate(const covgraph_rep* rep, double phi,
                                      const covgraph_tolerance* tol, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(rep && out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::evaluate(rep->value, phi, to_tolerance(tol))); });
}

covgraph_status covgraph_rep_pinch(const covgraph_rep* rep, const covgraph_matrix* a,
                                   covgraph_matrix** out) {
  COVGRAPH_REQUIRE(rep && a && out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::pinch(rep->value, a->value)); });
}

covgraph_status covgraph_rep_haar_average(const covgraph_rep* rep, const covgraph_matrix* a,
                                          size_t n_samples, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(rep && a && out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::haar_average(rep->value, a->value, n_samples)); });
}

// ---- operator graphs --------------------------------------------------------

covgraph_status covgraph_graph_orbit_analytic(const covgraph_rep* rep, const covgraph_matrix* seed,
                                              const covgraph_tolerance* tol,
                                              int allow_general_seed, covgraph_graph** out) {
  COVGRAPH_REQUIRE(rep && seed && out);
  *out = nullptr;
  return guarded([&] {
    *out = new covgraph_graph{covgraph::orbit_span_analytic(rep->value, seed->value,
                                                            to_tolerance(tol),
                                                            allow_general_seed != 0)};
  });
}

covgraph_status covgraph_graph_orbit_sampled(const covgraph_rep* rep, const covgraph_matrix* seed,
                                             size_t n_samples, const covgraph_tolerance* tol,
                                             covgraph_graph** out) {
  COVGRAPH_REQUIRE(rep && seed && out);
  *out = nullptr;
  return guarded([&] {
    *out = new covgraph_graph{
        covgraph::orbit_span_sampled(rep->value, seed->value, n_samples, to_tolerance(tol))};
  });
}

void covgraph_graph_free(covgraph_graph* graph) { delete graph; }

size_t covgraph_graph_dimension(const covgraph_graph* graph) {
  return graph ? graph->value.dimension() : 0;
}

covgraph_status covgraph_graph_basis(const covgraph_graph* graph, size_t index,
                                     covgraph_matrix** out) {
  COVGRAPH_REQUIRE(graph && out);
  *out = nullptr;
  if (index >= graph->value.dimension()) return fail(COVGRAPH_ERR_DIMENSION, "basis index out of range");
  return guarded([&] { *out = wrap(graph->value.basis[index]); });
}

covgraph_status covgraph_graph_is_operator_system(const covgraph_graph* graph,
                                                  const covgraph_tolerance* tol,
                                                  int* contains_identity, int* adjoint_closed) {
  COVGRAPH_REQUIRE(graph && contains_identity && adjoint_closed);
  return guarded([&] {
    const auto check = covgraph::is_operator_system(graph->value, to_tolerance(tol));
    *contains_identity = check.contains_identity ? 1 : 0;
    *adjoint_closed = check.adjoint_closed ? 1 : 0;
  });
}

covgraph_status covgraph_find_adjoint_ratio(const covgraph_rep* rep, const covgraph_matrix* seed,
                                            const covgraph_tolerance* tol, int* found, double* re,
                                            double* im) {
  COVGRAPH_REQUIRE(rep && seed && found && re && im);
  return guarded([&] {
    const auto h = covgraph::find_adjoint_ratio(rep->value, seed->value, to_tolerance(tol));
    *found = h ? 1 : 0;
    *re = h ? h->real() : 0.0;
    *im = h ? h->imag() : 0.0;
  });
}

// ---- anticliques ------------------------------------------------------------

covgraph_status covgraph_verify_anticlique(const covgraph_matrix* p, const covgraph_graph* graph,
                                           const covgraph_tolerance* tol,
                                           covgraph_verdict** out) {
  COVGRAPH_REQUIRE(p && graph && out);
  *out = nullptr;
  return guarded([&] {
    *out = new covgraph_verdict{
        covgraph::verify_anticlique(p->value, graph->value, to_tolerance(tol))};
  });
}

void covgraph_verdict_free(covgraph_verdict* verdict) { delete verdict; }

int covgraph_verdict_passed(const covgraph_verdict* verdict) {
  return verdict && verdict->value.passed ? 1 : 0;
}

double covgraph_verdict_max_residual(const covgraph_verdict* verdict) {
  return verdict ? verdict->value.max_residual : 0.0;
}

size_t covgraph_verdict_code_dimension(const covgraph_verdict* verdict) {
  return verdict ? verdict->value.code_dimension : 0;
}

size_t covgraph_verdict_constant_count(const covgraph_verdict* verdict) {
  return verdict ? verdict->value.constants.size() : 0;
}

covgraph_status covgraph_verdict_constant(const covgraph_verdict* verdict, size_t index,
                                          double* re, double* im) {
  COVGRAPH_REQUIRE(verdict && re && im);
  if (index >= verdict->value.constants.size()) {
    return fail(COVGRAPH_ERR_DIMENSION, "constant index out of range");
  }
  *re = verdict->value.constants[index].real();
  *im = verdict->value.constants[index].imag();
  return COVGRAPH_OK;
}

// ---- constructions ----------------------------------------------------------

double covgraph_qparams_z3(const covgraph_qparams* params) {
  return params ? to_params(*params).z3() : 0.0;
}

covgraph_status covgraph_build_q(const covgraph_qparams* params, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(params && out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::build_q(to_params(*params))); });
}

covgraph_status covgraph_bell_state(size_t d, size_t s, size_t n, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::bell_state(d, s, n)); });
}

covgraph_status covgraph_q_j(size_t d, size_t j, covgraph_matrix** out) {
  COVGRAPH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(covgraph::q_j(d, j)); });
}

// ---- commands ---------------------------------------------------------------

covgraph_status covgraph_run_demo4(const covgraph_qparams* params, const covgraph_tolerance* tol,
                                   covgraph_format format, char** report, int* exit_code) {
  COVGRAPH_REQUIRE(params && report && exit_code);
  return run_command(report, exit_code, format,
                     [&] { return covgraph::run_demo4(to_params(*params), to_tolerance(tol)); });
}

covgraph_status covgraph_run_bell(size_t d, size_t j, const covgraph_tolerance* tol,
                                  covgraph_format format, char** report, int* exit_code) {
  COVGRAPH_REQUIRE(report && exit_code);
  return run_command(report, exit_code, format,
                     [&] { return covgraph::run_bell(d, j, to_tolerance(tol)); });
}

covgraph_status covgraph_run_verify(const char* rep_json, const char* seed_json,
                                    const char* projection_json, size_t samples,
                                    int allow_general_seed, const covgraph_tolerance* tol,
                                    covgraph_format format, char** report, int* exit_code) {
  COVGRAPH_REQUIRE(rep_json && seed_json && projection_json && report && exit_code);
  return run_command(report, exit_code, format, [&] {
    covgraph::VerifyInputs inputs{rep_json, seed_json, projection_json, std::nullopt,
                                  allow_general_seed != 0};
    if (samples > 0) inputs.samples = samples;
    return covgraph::run_verify(inputs, to_tolerance(tol));
  });
}

covgraph_status covgraph_run_scan(const double* taus, size_t count, uint64_t seed,
                                  const covgraph_tolerance* tol, covgraph_format format,
                                  char** report, int* exit_code) {
  COVGRAPH_REQUIRE(report && exit_code && (taus || count == 0));
  return run_command(report, exit_code, format, [&] {
    const std::span<const double> grid(taus, count);
    return covgraph::run_scan(grid, seed, to_tolerance(tol));
  });
}

covgraph_status covgraph_parse_angle(const char* text, double* out) {
  COVGRAPH_REQUIRE(text && out);
  return guarded([&] { *out = covgraph::parse_angle(text); });
}

covgraph_status covgraph_parse_grid(const char* spec, double** values, size_t* count) {
  COVGRAPH_REQUIRE(spec && values && count);
  *values = nullptr;
  *count = 0;
  return guarded([&] {
    const std::vector<double> grid = covgraph::parse_grid(spec);
    auto* buffer = static_cast<double*>(std::malloc(sizeof(double) * (grid.empty() ? 1 : grid.size())));
    if (buffer == nullptr) throw std::bad_alloc();
    std::copy(grid.begin(), grid.end(), buffer);
    *values = buffer;
    *count = grid.size();
  });
}

}  // extern "C"
