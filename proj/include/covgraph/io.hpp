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

// JSON encodings of matrices and representations.
//
//   matrix: {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}  (row-major)
//   rep:    {"dim": n, "freqs": [s1, ...], "projections": [matrix, ...]}
//
// canonical_dump() writes compact JSON with sorted keys and floats at 17
// significant digits, so dump(parse(dump(x))) is byte-identical.

#ifndef COVGRAPH_IO_HPP
#define COVGRAPH_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "covgraph/circle_rep.hpp"
#include "covgraph/matrix.hpp"

namespace covgraph {

using Json = nlohmann::json;

/// Throws InputError on malformed text.
Json parse_json(std::string_view text);

std::string canonical_dump(const Json& value);

Json matrix_to_json(const ComplexMatrix& m);
/// Throws InputError when the document does not describe a finite matrix.
ComplexMatrix matrix_from_json(const Json& doc);

Json rep_to_json(const CircleRep& rep);
CircleRep rep_from_json(const Json& doc);

Json complex_to_json(Complex z);

}  // namespace covgraph

#endif  // COVGRAPH_IO_HPP
