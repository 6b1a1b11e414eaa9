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

/**
 * @file
 * Discrete quantum games: an input state, one finite list of unitaries per
 * player, and the grid of output states |psi_ij> indexed by strategy
 * profile (i, j). Player A picks the row, player B the column.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dqg/errors.hpp"
#include "dqg/quantum_core.hpp"

namespace dqg {

/// 0-based strategy profile: A plays ops_a[row], B plays ops_b[col].
struct Profile {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Row-major rows x cols container.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Grid(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) throw ShapeMismatch("Grid: element count does not match shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  T& operator[](const Profile& p) { return (*this)(p.row, p.col); }
  const T& operator[](const Profile& p) const { return (*this)(p.row, p.col); }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

  bool same_shape(const auto& other) const {
    return rows_ == other.rows() && cols_ == other.cols();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

enum class PlayOrder { B_FIRST, A_FIRST };

inline const char* to_string(PlayOrder order) {
  return order == PlayOrder::B_FIRST ? "B_FIRST" : "A_FIRST";
}

/// A discrete quantum game. B_FIRST reads the operator string
/// alpha_i beta_j |psi_in> literally: beta_j acts first.
struct GameDefinition {
  StateVector input_state;
  std::vector<UnitaryOp> ops_a;
  std::vector<UnitaryOp> ops_b;
  PlayOrder play_order = PlayOrder::B_FIRST;

  std::size_t dim() const { return input_state.dim(); }
  std::size_t m() const { return ops_a.size(); }
  std::size_t n() const { return ops_b.size(); }

  /// Shape checks; unitarity is already enforced by UnitaryOp.
  void validate() const {
    if (ops_a.empty()) throw ValidationError("GameDefinition: ops_a is empty (m >= 1)");
    if (ops_b.empty()) throw ValidationError("GameDefinition: ops_b is empty (n >= 1)");
    for (const auto& op : ops_a)
      if (op.dim() != dim()) throw DimensionMismatch("GameDefinition ops_a", op.dim(), dim());
    for (const auto& op : ops_b)
      if (op.dim() != dim()) throw DimensionMismatch("GameDefinition ops_b", op.dim(), dim());
  }

  friend bool operator==(const GameDefinition&, const GameDefinition&) = default;
};

/// All m*n output states; duplicates are kept per profile.
using OutputTable = Grid<StateVector>;

inline OutputTable build_outputs(const GameDefinition& g) {
  g.validate();
  std::vector<StateVector> states;
  states.reserve(g.m() * g.n());
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (g.play_order == PlayOrder::B_FIRST) {
        states.push_back(apply(g.ops_a[i], apply(g.ops_b[j], g.input_state)));
      } else {
        states.push_back(apply(g.ops_b[j], apply(g.ops_a[i], g.input_state)));
      }
    }
  }
  return OutputTable(g.m(), g.n(), std::move(states));
}

struct OrderSensitivityReport {
  Grid<std::uint8_t> commuting_pairs;  // 1 where [alpha_i, beta_j] vanishes
  bool outputs_match = true;
  // Largest commutator norm over all (i, j).
  double max_commutator_norm = 0.0;
};

/// Compares both orders of play profile by profile. An op pair counts as
/// commuting when its commutator norm is at most `tol`.
inline OrderSensitivityReport order_sensitivity(const GameDefinition& g, double tol) {
  g.validate();
  GameDefinition b_first = g;
  b_first.play_order = PlayOrder::B_FIRST;
  GameDefinition a_first = g;
  a_first.play_order = PlayOrder::A_FIRST;
  const OutputTable ab = build_outputs(b_first);
  const OutputTable ba = build_outputs(a_first);

  OrderSensitivityReport report{Grid<std::uint8_t>(g.m(), g.n(), 1), true, 0.0};
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      const double c = commutator_norm(g.ops_a[i], g.ops_b[j]);
      report.max_commutator_norm = std::max(report.max_commutator_norm, c);
      report.commuting_pairs(i, j) = c <= tol ? 1 : 0;
      if (!equal_up_to_phase(ab(i, j), ba(i, j), tol)) report.outputs_match = false;
    }
  }
  return report;
}

}  // namespace dqg
