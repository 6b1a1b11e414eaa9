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

// Human-readable tables: states in the computational basis, preferences as
// chains "ψ3 ≻ ψ1 ≻ ψ4 ≻ ψ2" where ψk is the k-th profile in row-major order.

#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dqg/game.hpp"
#include "dqg/preferences.hpp"
#include "dqg/quantum_core.hpp"

namespace dqg::render {

inline std::string fixed4(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline std::string basis_label(std::size_t index, std::size_t dim) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < dim) ++bits;
  if ((std::size_t{1} << bits) != dim || bits == 0) return "|" + std::to_string(index) + "⟩";
  std::string label;
  for (std::size_t b = bits; b-- > 0;) label += ((index >> b) & 1U) ? '1' : '0';
  return "|" + label + "⟩";
}

inline std::string amplitude(const Complex& z) {
  const bool re = std::abs(z.real()) >= 5e-5, im = std::abs(z.imag()) >= 5e-5;
  if (re && !im) return fixed4(z.real());
  if (!re && im) return fixed4(z.imag()) + "i";
  std::string imag = fixed4(z.imag());
  if (imag.front() != '-') imag = "+" + imag;
  return "(" + fixed4(z.real()) + imag + "i)";
}

/// e.g. "0.7071|00⟩ + 0.7071i|11⟩"; amplitudes below 5e-5 are dropped.
inline std::string state(const StateVector& s) {
  std::string out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (std::abs(s[k]) < 5e-5) continue;
    std::string amp = amplitude(s[k]);
    if (!out.empty()) {
      if (amp.front() == '-') {
        out += " - ";
        amp.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += amp + basis_label(k, s.dim());
  }
  return out.empty() ? "0" : out;
}

inline std::string psi_label(const Profile& p, std::size_t cols) {
  return "ψ" + std::to_string(p.row * cols + p.col + 1);
}

inline std::string profile(const Profile& p) {
  return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")";
}

/// "ψ3 ≻ ψ1 = ψ2 ≻ ψ4"
inline std::string rank_chain(const Preference& pref) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < pref.ranks.size(); ++k) groups[pref.ranks.flat()[k]].push_back(k);
  std::string out;
  for (const auto& [rank, members] : groups) {
    if (!out.empty()) out += " ≻ ";
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out += " = ";
      out += "ψ" + std::to_string(members[k] + 1);
    }
  }
  return out;
}

template <class T>
std::string grid(const Grid<T>& g) {
  std::ostringstream out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c > 0) out << ", ";
      if constexpr (std::is_floating_point_v<T>) out << fixed4(g(r, c));
      else out << g(r, c);
    }
    out << "]\n";
  }
  return out.str();
}

inline std::string output_table(const OutputTable& outputs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < outputs.rows(); ++i)
    for (std::size_t j = 0; j < outputs.cols(); ++j) {
      const Profile p{i, j};
      out << "  " << psi_label(p, outputs.cols()) << " " << profile(p) << " = " << state(outputs[p]) << "\n";
    }
  return out.str();
}

}  // namespace dqg::render
