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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dqg/errors.hpp"
#include "dqg/game.hpp"
#include "dqg/preferences.hpp"

namespace dqg {

struct EquilibriumResult {
  std::vector<Profile> equilibria;  // row-major order
  std::vector<StateVector> states;  // parallel to equilibria; empty from pure_nash alone
  // (score_A, score_B) per equilibrium, present when both preferences are cardinal.
  std::optional<std::vector<std::pair<double, double>>> payoffs;

  bool exists() const { return !equilibria.empty(); }
};

/// True when neither player has a strictly better unilateral deviation.
inline bool is_pure_nash(const Preference& pa, const Preference& pb, const Profile& p) {
  for (std::size_t i = 0; i < pa.rows(); ++i)
    if (pa.ranks(i, p.col) < pa.ranks[p]) return false;
  for (std::size_t j = 0; j < pb.cols(); ++j)
    if (pb.ranks(p.row, j) < pb.ranks[p]) return false;
  return true;
}

/// Exhaustive scan for pure-strategy equilibria. A picks the row, B the
/// column; ties never break an equilibrium.
inline EquilibriumResult pure_nash(const Preference& pa, const Preference& pb) {
  if (!pa.ranks.same_shape(pb.ranks)) {
    throw ShapeMismatch("pure_nash: preference grids " + std::to_string(pa.rows()) + "x" +
                        std::to_string(pa.cols()) + " and " + std::to_string(pb.rows()) + "x" +
                        std::to_string(pb.cols()) + " differ");
  }
  EquilibriumResult result;
  const bool cardinal = pa.cardinal.has_value() && pb.cardinal.has_value();
  if (cardinal) result.payoffs.emplace();
  for (std::size_t i = 0; i < pa.rows(); ++i) {
    for (std::size_t j = 0; j < pa.cols(); ++j) {
      const Profile p{i, j};
      if (!is_pure_nash(pa, pb, p)) continue;
      result.equilibria.push_back(p);
      if (cardinal) result.payoffs->emplace_back((*pa.cardinal)[p], (*pb.cardinal)[p]);
    }
  }
  return result;
}

struct SolveReport {
  OutputTable outputs;
  Preference pref_a;
  Preference pref_b;
  EquilibriumResult equilibrium;
};

/// build_outputs -> preferences -> pure_nash, with equilibrium states attached.
inline SolveReport solve(const GameDefinition& g, const PreferenceSpec& spec_a,
                         const PreferenceSpec& spec_b, double tie_tol = TIE_TOL) {
  OutputTable outputs = build_outputs(g);
  Preference pa = make_preference(outputs, spec_a, Player::A, tie_tol);
  Preference pb = make_preference(outputs, spec_b, Player::B, tie_tol);
  EquilibriumResult eq = pure_nash(pa, pb);
  for (const auto& p : eq.equilibria) eq.states.push_back(outputs[p]);
  return SolveReport{std::move(outputs), std::move(pa), std::move(pb), std::move(eq)};
}

/// Candidate (pi_A, pi_B) pairs whose global-distance preferences make
/// `target` the unique equilibrium of `g`, in candidate order.
inline std::vector<std::pair<StateVector, StateVector>> reverse_engineer_distance(
    const GameDefinition& g, const Profile& target,
    const std::vector<std::pair<StateVector, StateVector>>& candidates, double tie_tol = TIE_TOL) {
  g.validate();
  if (target.row >= g.m() || target.col >= g.n()) {
    throw ValidationError("reverse_engineer_distance: target profile out of range");
  }
  const OutputTable outputs = build_outputs(g);
  std::vector<std::pair<StateVector, StateVector>> accepted;
  for (const auto& [pi_a, pi_b] : candidates) {
    const auto pa = distance_pref_global(outputs, pi_a, Player::A, tie_tol);
    const auto pb = distance_pref_global(outputs, pi_b, Player::B, tie_tol);
    const auto eq = pure_nash(pa, pb);
    if (eq.equilibria.size() == 1 && eq.equilibria.front() == target) accepted.emplace_back(pi_a, pi_b);
  }
  return accepted;
}

// ---------------------------------------------------------------------------

/// ((m n)!)^2: one strict ordering of the m*n outputs per player.
inline boost::multiprecision::cpp_int count_games(std::size_t m, std::size_t n) {
  boost::multiprecision::cpp_int f = 1;
  for (std::size_t k = 2; k <= m * n; ++k) f *= k;
  return f * f;
}

inline constexpr const char* kGameCountInterpretation =
    "((mn)!)^2: each player strictly orders the mn output states; the count squares over both players";

struct OrderingCensus {
  std::uint64_t pairs_enumerated = 0;
  std::uint64_t unique_target_count = 0;
  // One (A ranks, B ranks) pair realizing target as unique equilibrium.
  std::optional<std::pair<Grid<int>, Grid<int>>> witness;
};

/// Brute force over every pair of strict orderings on an m x n grid, counting
/// those whose unique pure equilibrium is `target`.
inline OrderingCensus enumerate_orderings(std::size_t m, std::size_t n, const Profile& target,
                                          std::uint64_t cap = 1'000'000) {
  if (m == 0 || n == 0) throw ValidationError("enumerate_orderings: empty grid");
  if (target.row >= m || target.col >= n) throw ValidationError("enumerate_orderings: target out of range");
  const auto total = count_games(m, n);
  if (total > cap) {
    throw CapExceeded("CapExceeded: ((mn)!)^2 = " + total.str() + " exceeds cap " + std::to_string(cap));
  }
  const std::size_t cells = m * n;
  if (cells > 64) throw CapExceeded("CapExceeded: grid too large");

  // For each strict ordering, the profiles where the player has no
  // profitable deviation, as a bitmask.
  std::vector<std::vector<int>> perms;
  std::vector<std::uint64_t> stable_a, stable_b;
  std::vector<int> ranks(cells);
  std::iota(ranks.begin(), ranks.end(), 0);
  do {
    std::uint64_t mask_a = 0, mask_b = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int here = ranks[i * n + j];
        bool a_ok = true, b_ok = true;
        for (std::size_t k = 0; k < m; ++k) a_ok = a_ok && ranks[k * n + j] >= here;
        for (std::size_t k = 0; k < n; ++k) b_ok = b_ok && ranks[i * n + k] >= here;
        if (a_ok) mask_a |= std::uint64_t{1} << (i * n + j);
        if (b_ok) mask_b |= std::uint64_t{1} << (i * n + j);
      }
    }
    perms.push_back(ranks);
    stable_a.push_back(mask_a);
    stable_b.push_back(mask_b);
  } while (std::next_permutation(ranks.begin(), ranks.end()));

  const std::uint64_t want = std::uint64_t{1} << (target.row * n + target.col);
  OrderingCensus census;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      ++census.pairs_enumerated;
      if ((stable_a[a] & stable_b[b]) != want) continue;
      ++census.unique_target_count;
      if (!census.witness) census.witness.emplace(Grid<int>(m, n, perms[a]), Grid<int>(m, n, perms[b]));
    }
  }
  return census;
}

}  // namespace dqg
