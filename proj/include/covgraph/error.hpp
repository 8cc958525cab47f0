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

#ifndef COVGRAPH_ERROR_HPP
#define COVGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-Hermitian, non-unitary,
/// not a projection, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A set of vectors expected to be linearly independent is not.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, parameter ranges).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace covgraph

#endif  // COVGRAPH_ERROR_HPP
