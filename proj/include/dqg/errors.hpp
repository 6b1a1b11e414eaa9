// Copyright 2026 The dqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dqg {

/// A value violated one of the engine's invariants (bad dimension, non-unitary
/// operator, malformed preference, ...). The CLI maps this to exit status 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or inline document could not be read or decoded. CLI exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public ValidationError {
 public:
  DimensionMismatch(const std::string& where, std::size_t lhs, std::size_t rhs)
      : ValidationError("DimensionMismatch in " + where + ": " +
                        std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class ShapeMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AmbiguousLocalMaximum : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotStrictlyCompetitive : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CapExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MismatchedEigenbases : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace dqg
