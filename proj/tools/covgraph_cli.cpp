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

// covgraph: command-line front end over the libcovgraph C interface.
//
//   covgraph [--json] [--tol EPS] demo4 --tau T --z1 A --z2 A --z4 A [--k K] [--z3 A]
//   covgraph [--json] [--tol EPS] bell --dim D --j J
//   covgraph [--json] [--tol EPS] verify --rep FILE --m0 FILE --proj FILE [--samples N]
//   covgraph [--json] [--tol EPS] scan --tau-grid SPEC [--seed S]
//
// Exit status: 0 when every assertion holds, 1 when one fails, 2 on input errors.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "covgraph/covgraph.h"

namespace {

constexpr int kExitInput = 2;

struct InputFailure {
  std::string message;
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { covgraph_string_free(ptr); }
};

void check(covgraph_status status) {
  if (status != COVGRAPH_OK) {
    throw InputFailure{std::string(covgraph_status_name(status)) + ": " + covgraph_last_error()};
  }
}

double angle(const std::string& text) {
  double value = 0.0;
  check(covgraph_parse_angle(text.c_str(), &value));
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{"cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(covgraph_status status, StringHandle& report, int exit_code) {
  if (status != COVGRAPH_OK) {
    std::cerr << "error: " << covgraph_status_name(status) << ": " << covgraph_last_error()
              << '\n';
    return kExitInput;
  }
  std::cout << report.ptr << '\n';
  return exit_code;
}

struct Demo4Options {
  double tau = 0.0;
  std::string z1 = "0";
  std::string z2 = "0";
  std::string z4 = "0";
  std::optional<int> k;
  std::optional<std::string> z3;
};

covgraph_qparams demo4_params(const Demo4Options& opt) {
  covgraph_qparams params{opt.tau, angle(opt.z1), angle(opt.z2), angle(opt.z4), opt.k.value_or(0)};
  if (!opt.z3) return params;

  const double z3 = angle(*opt.z3);
  const double base = covgraph_qparams_z3(&params) - 2.0 * std::numbers::pi * params.k;
  const double turns = (z3 - base) / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-9) {
    throw InputFailure{"--z3 is not z1 + z4 - z2 + pi modulo 2 pi"};
  }
  if (opt.k && *opt.k != static_cast<int>(rounded)) {
    throw InputFailure{"--z3 and --k disagree"};
  }
  params.k = static_cast<int>(rounded);
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator graphs from circle representations: anticlique certification"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<double> tol_flag;
  app.add_flag("--json", json, "Emit the canonical JSON report");
  app.add_option("--tol", tol_flag, "Equality tolerance (overrides COVGRAPH_TOL)")
      ->check(CLI::PositiveNumber);

  Demo4Options demo;
  auto* demo4 = app.add_subcommand("demo4", "Two-block pipeline for one projection-family member");
  demo4->add_option("--tau", demo.tau, "Family parameter in [0, 1/2]")->required();
  demo4->add_option("--z1", demo.z1, "Phase in radians (pi literals allowed)");
  demo4->add_option("--z2", demo.z2, "Phase in radians (pi literals allowed)");
  demo4->add_option("--z4", demo.z4, "Phase in radians (pi literals allowed)");
  demo4->add_option("--k", demo.k, "Winding integer of the derived phase");
  demo4->add_option("--z3", demo.z3, "Derived phase, checked for consistency");

  std::size_t dim = 0;
  std::size_t j = 0;
  auto* bell = app.add_subcommand("bell", "Bell-basis pinching and anticliques");
  bell->add_option("--dim", dim, "Local dimension d >= 2")->required();
  bell->add_option("--j", j, "Basis index 1 <= j <= d")->required();

  std::string rep_file;
  std::string m0_file;
  std::string proj_file;
  std::size_t samples = 0;
  bool allow_general = false;
  auto* verify = app.add_subcommand("verify", "Check a user-supplied instance read from files");
  verify->add_option("--rep", rep_file, "Representation JSON")->required();
  verify->add_option("--m0", m0_file, "Seed operator JSON")->required();
  verify->add_option("--proj", proj_file, "Candidate projection JSON")->required();
  verify->add_option("--samples", samples, "Cross-check with an N-point sampled orbit")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--allow-general-seed", allow_general, "Accept seeds that are not PSD");

  std::string grid;
  std::uint64_t seed = 0;
  auto* scan = app.add_subcommand("scan", "Sweep the projection family over a tau grid");
  scan->add_option("--tau-grid", grid, "Comma list or lo:hi:count")->required();
  scan->add_option("--seed", seed, "Seed for the random phases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const char* env = std::getenv("COVGRAPH_TOL");
    covgraph_tolerance tol{};
    check(covgraph_tolerance_resolve(env, tol_flag ? &*tol_flag : nullptr, &tol));
    const covgraph_format format = json ? COVGRAPH_FORMAT_JSON : COVGRAPH_FORMAT_TEXT;

    StringHandle report;
    int exit_code = kExitInput;
    covgraph_status status = COVGRAPH_ERR_INTERNAL;

    if (*demo4) {
      const covgraph_qparams params = demo4_params(demo);
      status = covgraph_run_demo4(&params, &tol, format, &report.ptr, &exit_code);
    } else if (*bell) {
      status = covgraph_run_bell(dim, j, &tol, format, &report.ptr, &exit_code);
    } else if (*verify) {
      const std::string rep = read_file(rep_file);
      const std::string m0 = read_file(m0_file);
      const std::string proj = read_file(proj_file);
      status = covgraph_run_verify(rep.c_str(), m0.c_str(), proj.c_str(), samples,
                                   allow_general ? 1 : 0, &tol, format, &report.ptr,
                                   &exit_code);
    } else if (*scan) {
      double* taus = nullptr;
      std::size_t count = 0;
      check(covgraph_parse_grid(grid.c_str(), &taus, &count));
      status = covgraph_run_scan(taus, count, seed, &tol, format, &report.ptr, &exit_code);
      covgraph_doubles_free(taus);
    }
    return emit(status, report, exit_code);
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitInput;
  }
}
