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

#include <cmath>
#include <random>
#include <vector>

#include "dqg/quantum_core.hpp"

namespace dqg::random {

using Rng = std::mt19937_64;

inline std::vector<Complex> gaussian_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(dim);
  for (auto& z : v) {
    const double re = normal(rng);
    z = Complex{re, normal(rng)};
  }
  return v;
}

inline StateVector state(std::size_t dim, Rng& rng) {
  return StateVector::normalized(gaussian_vector(dim, rng));
}

/// Orthonormal list of `dim` vectors: Gram-Schmidt over complex Gaussian
/// draws (Haar distributed). Near-degenerate draws are redrawn.
inline std::vector<StateVector> orthonormal_basis(std::size_t dim, Rng& rng) {
  std::vector<std::vector<Complex>> cols;
  while (cols.size() < dim) {
    auto v = gaussian_vector(dim, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) {
        Complex ip{};
        for (std::size_t k = 0; k < dim; ++k) ip += std::conj(q[k]) * v[k];
        for (std::size_t k = 0; k < dim; ++k) v[k] -= ip * q[k];
      }
    }
    double n2 = 0.0;
    for (const auto& z : v) n2 += std::norm(z);
    if (n2 < 1e-6) continue;
    const double n = std::sqrt(n2);
    for (auto& z : v) z /= n;
    cols.push_back(std::move(v));
  }
  std::vector<StateVector> out;
  out.reserve(dim);
  for (auto& c : cols) out.emplace_back(std::move(c));
  return out;
}

/// Haar-random unitary whose columns are a random orthonormal basis.
inline UnitaryOp unitary(std::size_t dim, Rng& rng) {
  const auto cols = orthonormal_basis(dim, rng);
  Matrix m(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  return UnitaryOp(std::move(m));
}

inline HermitianObservable observable(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  std::vector<double> eig(dim);
  for (auto& v : eig) v = value(rng);
  return HermitianObservable(orthonormal_basis(dim, rng), std::move(eig));
}

}  // namespace dqg::random
