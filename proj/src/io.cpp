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

#include "covgraph/io.hpp"

#include <cmath>
#include <cstdio>

#include "covgraph/error.hpp"

namespace covgraph {

namespace {

void dump_into(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw InputError("cannot serialize a non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      break;
    }
    case Json::value_t::string:
      out += v.dump();
      break;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        dump_into(item, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      // nlohmann's default object type is an ordered std::map.
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    default:
      throw InputError("unsupported JSON value");
  }
}

std::size_t positive_size(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() <= 0) {
    throw InputError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string canonical_dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("matrix must be a JSON object");
  const std::size_t rows = positive_size(doc, "rows");
  const std::size_t cols = positive_size(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array() || doc["data"].size() != rows) {
    throw InputError("matrix \"data\" must be an array of " + std::to_string(rows) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : doc["data"]) {
    if (!row.is_array() || row.size() != cols) {
      throw InputError("every matrix row must hold " + std::to_string(cols) + " entries");
    }
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw InputError("matrix entries must be [re, im] number pairs");
      }
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw InputError("matrix entries must be finite");
      entries.emplace_back(re, im);
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json rep_to_json(const CircleRep& rep) {
  Json projections = Json::array();
  for (const auto& p : rep.projections()) projections.push_back(matrix_to_json(p));
  return Json{{"dim", rep.dim()},
              {"freqs", std::vector<int>(rep.freqs().begin(), rep.freqs().end())},
              {"projections", std::move(projections)}};
}

CircleRep rep_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("representation must be a JSON object");
  const std::size_t dim = positive_size(doc, "dim");
  if (!doc.contains("freqs") || !doc["freqs"].is_array() || doc["freqs"].empty()) {
    throw InputError("field \"freqs\" must be a non-empty array of integers");
  }
  if (!doc.contains("projections") || !doc["projections"].is_array()) {
    throw InputError("field \"projections\" must be an array of matrices");
  }
  std::vector<int> freqs;
  for (const auto& f : doc["freqs"]) {
    if (!f.is_number_integer()) throw InputError("frequencies must be integers");
    freqs.push_back(f.get<int>());
  }
  std::vector<ComplexMatrix> projections;
  for (const auto& p : doc["projections"]) projections.push_back(matrix_from_json(p));
  if (projections.size() != freqs.size()) {
    throw InputError("\"freqs\" and \"projections\" differ in length");
  }
  for (const auto& p : projections) {
    if (p.rows() != dim || p.cols() != dim) {
      throw InputError("projections must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
  }
  return CircleRep::make(std::move(freqs), std::move(projections));
}

}  // namespace covgraph
