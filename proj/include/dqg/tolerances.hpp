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

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "dqg/errors.hpp"

namespace dqg {

inline constexpr double NORM_TOL = 1e-9;
inline constexpr double UNITARY_TOL = 1e-9;
inline constexpr double TIE_TOL = 1e-9;

struct Tolerances {
  double norm = NORM_TOL;
  double unitary = UNITARY_TOL;
  double tie = TIE_TOL;

  /// All three tolerances replaced by the decimal in DQG_TOL, when set.
  static Tolerances from_env() {
    Tolerances tol;
    const char* raw = std::getenv("DQG_TOL");
    if (raw == nullptr || *raw == '\0') return tol;
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(raw, &end);
    if (errno != 0 || end == raw || *end != '\0' || !std::isfinite(value) ||
        value <= 0.0) {
      throw ValidationError(std::string("DQG_TOL is not a positive decimal: ") +
                            raw);
    }
    tol.norm = tol.unitary = tol.tie = value;
    return tol;
  }
};

}  // namespace dqg
