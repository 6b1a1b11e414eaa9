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
 * Player preferences over the m x n output grid.
 *
 * Every rule here produces a cardinal score per profile (larger is better)
 * and derives a weak order from it:
 *
 *  - measurement: expected payoff sum_k w_k |<psi_ij|phi_k>|^2
 *  - distance_global: |<psi_ij|gamma>|^2
 *  - distance_local: |<psi_ij|gamma_loc>|^2, gamma_loc the output closest to gamma
 *  - variance: -Var(M; psi_ij)
 *  - info: log2(dim) - H(p), p the outcome distribution of M
 *
 * The ordering rule ranks outputs against an explicit list of states and
 * carries no cardinal scores.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dqg/errors.hpp"
#include "dqg/game.hpp"
#include "dqg/quantum_core.hpp"
#include "dqg/tolerances.hpp"

namespace dqg {

enum class Player { A, B };

inline const char* to_string(Player p) { return p == Player::A ? "A" : "B"; }

/// Weak order over profiles. ranks: 0 is most preferred, ties share a rank,
/// used ranks are exactly {0, ..., r}.
struct Preference {
  Player player = Player::A;
  Grid<int> ranks;
  std::optional<Grid<double>> cardinal;

  std::size_t rows() const { return ranks.rows(); }
  std::size_t cols() const { return ranks.cols(); }
  int rank(const Profile& p) const { return ranks[p]; }
};

/// Throws unless `ranks` uses exactly the values 0..r.
inline void validate_ranks(const Grid<int>& ranks) {
  if (ranks.size() == 0) throw ValidationError("Preference: empty rank grid");
  const int top = *std::max_element(ranks.flat().begin(), ranks.flat().end());
  std::vector<bool> used(static_cast<std::size_t>(std::max(top, 0)) + 1, false);
  for (int r : ranks.flat()) {
    if (r < 0) throw ValidationError("Preference: negative rank");
    used[static_cast<std::size_t>(r)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw ValidationError("Preference: ranks are not consecutive (weak order has gaps)");
  }
}

/// Descending-score ranking. Scores within `tie_tol` of the leading score of
/// the current group share its rank.
inline Grid<int> rank_by_score(const Grid<double>& scores, double tie_tol) {
  const auto& flat = scores.flat();
  std::vector<std::size_t> order(flat.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return flat[l] > flat[r]; });
  std::vector<int> ranks(flat.size(), 0);
  int rank = 0;
  double leader = flat.empty() ? 0.0 : flat[order.front()];
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double v = flat[order[k]];
    if (leader - v > tie_tol) {
      ++rank;
      leader = v;
    }
    ranks[order[k]] = rank;
  }
  return Grid<int>(scores.rows(), scores.cols(), std::move(ranks));
}

inline Preference preference_from_scores(Player player, Grid<double> scores, double tie_tol) {
  for (double v : scores.flat())
    if (!std::isfinite(v)) throw ValidationError("Preference: non-finite cardinal score");
  Preference p{player, rank_by_score(scores, tie_tol), std::move(scores)};
  return p;
}

inline Preference preference_from_ranks(Player player, Grid<int> ranks) {
  validate_ranks(ranks);
  return Preference{player, std::move(ranks), std::nullopt};
}

// ---------------------------------------------------------------------------

/// Per-eigenstate payoff pairs (w_k^A, w_k^B).
struct OutcomeWeights {
  std::vector<double> a;
  std::vector<double> b;

  /// Set only by strictly_competitive_weights.
  struct StrictlyCompetitive {
    Player player;
    std::size_t preferred_index;
    double high;
    double low;
  };
  std::optional<StrictlyCompetitive> strictly_competitive;

  std::size_t size() const { return a.size(); }
  const std::vector<double>& column(Player p) const { return p == Player::A ? a : b; }
};

/// Outcome distribution p_k = |<psi|e_k>|^2 of measuring `m` on `psi`.
inline std::vector<double> outcome_probabilities(const StateVector& psi,
                                                 const HermitianObservable& m) {
  if (psi.dim() != m.dim()) throw DimensionMismatch("outcome_probabilities", psi.dim(), m.dim());
  std::vector<double> p;
  p.reserve(m.dim());
  for (const auto& e : m.basis()) p.push_back(overlap2(psi, e));
  return p;
}

inline double expected_payoff(const StateVector& psi, const HermitianObservable& m,
                              std::span<const double> weights) {
  if (weights.size() != m.dim()) {
    throw DimensionMismatch("expected_payoff weight count", weights.size(), m.dim());
  }
  const auto p = outcome_probabilities(psi, m);
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) acc += weights[k] * p[k];
  return acc;
}

/// One player's induced preference from a single weight column.
inline Preference induced_preference_for(const OutputTable& outputs, const HermitianObservable& m,
                                         std::span<const double> weights, Player player,
                                         double tie_tol = TIE_TOL) {
  if (weights.size() != m.dim()) {
    throw DimensionMismatch("induced_preference weight count", weights.size(), m.dim());
  }
  for (double w : weights)
    if (!std::isfinite(w)) throw ValidationError("induced_preference: non-finite weight");
  std::vector<double> scores;
  scores.reserve(outputs.size());
  for (const auto& psi : outputs.flat()) scores.push_back(expected_payoff(psi, m, weights));
  return preference_from_scores(player, Grid<double>(outputs.rows(), outputs.cols(), std::move(scores)),
                                tie_tol);
}

/// Expected-payoff preferences for both players; cardinal grids hold <O_A>_ij
/// and <O_B>_ij.
inline std::pair<Preference, Preference> induced_preference(const OutputTable& outputs,
                                                            const HermitianObservable& m,
                                                            const OutcomeWeights& w,
                                                            double tie_tol = TIE_TOL) {
  if (w.a.size() != m.dim() || w.b.size() != m.dim()) {
    throw DimensionMismatch("induced_preference weight count", std::max(w.a.size(), w.b.size()), m.dim());
  }
  return {induced_preference_for(outputs, m, w.a, Player::A, tie_tol),
          induced_preference_for(outputs, m, w.b, Player::B, tie_tol)};
}

/// Weight `high` on one eigenstate and `low` on the rest for `player`; the
/// other player's column is left at zero.
inline OutcomeWeights strictly_competitive_weights(const HermitianObservable& m,
                                                   std::size_t preferred_index, double high,
                                                   double low, Player player) {
  if (!(high > low)) {
    throw NotStrictlyCompetitive("NotStrictlyCompetitive: need a > b, got a = " +
                                 std::to_string(high) + ", b = " + std::to_string(low));
  }
  if (preferred_index >= m.dim()) {
    throw DimensionMismatch("strictly_competitive_weights index", preferred_index, m.dim());
  }
  std::vector<double> column(m.dim(), low);
  column[preferred_index] = high;
  OutcomeWeights w{std::vector<double>(m.dim(), 0.0), std::vector<double>(m.dim(), 0.0),
                   OutcomeWeights::StrictlyCompetitive{player, preferred_index, high, low}};
  (player == Player::A ? w.a : w.b) = std::move(column);
  return w;
}

inline Preference distance_pref_global(const OutputTable& outputs, const StateVector& gamma,
                                       Player player, double tie_tol = TIE_TOL) {
  std::vector<double> scores;
  scores.reserve(outputs.size());
  for (const auto& psi : outputs.flat()) scores.push_back(overlap2(psi, gamma));
  return preference_from_scores(player, Grid<double>(outputs.rows(), outputs.cols(), std::move(scores)),
                                tie_tol);
}

/// The output closest to `gamma`. Outputs tying for closest are accepted only
/// if they are the same ray.
inline const StateVector& local_most_preferred(const OutputTable& outputs, const StateVector& gamma,
                                               double tie_tol = TIE_TOL) {
  const auto& flat = outputs.flat();
  if (flat.empty()) throw ValidationError("distance_pref_local: empty output table");
  std::size_t best = 0;
  double best_score = overlap2(flat[0], gamma);
  for (std::size_t k = 1; k < flat.size(); ++k) {
    const double s = overlap2(flat[k], gamma);
    if (s > best_score) {
      best = k;
      best_score = s;
    }
  }
  for (std::size_t k = 0; k < flat.size(); ++k) {
    if (k == best) continue;
    if (best_score - overlap2(flat[k], gamma) <= tie_tol &&
        !equal_up_to_phase(flat[k], flat[best], tie_tol)) {
      throw AmbiguousLocalMaximum("AmbiguousLocalMaximum: profiles " + std::to_string(best) + " and " +
                                  std::to_string(k) + " tie for closest to gamma");
    }
  }
  return flat[best];
}

inline Preference distance_pref_local(const OutputTable& outputs, const StateVector& gamma,
                                      Player player, double tie_tol = TIE_TOL) {
  if (!outputs.flat().empty() && outputs.flat().front().dim() != gamma.dim()) {
    throw DimensionMismatch("distance_pref_local", outputs.flat().front().dim(), gamma.dim());
  }
  const StateVector local = local_most_preferred(outputs, gamma, tie_tol);
  return distance_pref_global(outputs, local, player, tie_tol);
}

/// Var(M; psi) = sum lambda^2 p - (sum lambda p)^2, floored at zero.
inline double variance(const StateVector& psi, const HermitianObservable& m) {
  const auto p = outcome_probabilities(psi, m);
  double mean = 0.0, second = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double l = m.eigenvalues()[k];
    mean += l * p[k];
    second += l * l * p[k];
  }
  return std::max(0.0, second - mean * mean);
}

inline Preference variance_pref(const OutputTable& outputs, const HermitianObservable& m,
                                Player player, double tie_tol = TIE_TOL) {
  std::vector<double> scores;
  scores.reserve(outputs.size());
  for (const auto& psi : outputs.flat()) scores.push_back(-variance(psi, m));
  return preference_from_scores(player, Grid<double>(outputs.rows(), outputs.cols(), std::move(scores)),
                                tie_tol);
}

/// log2(dim) - H(p) in bits, with 0 log 0 = 0.
inline double shannon_information(const StateVector& psi, const HermitianObservable& m) {
  const auto p = outcome_probabilities(psi, m);
  double entropy = 0.0;
  for (double q : p)
    if (q > 0.0) entropy -= q * std::log2(q);
  return std::log2(static_cast<double>(m.dim())) - entropy;
}

inline Preference info_pref(const OutputTable& outputs, const HermitianObservable& m, Player player,
                            double tie_tol = TIE_TOL) {
  std::vector<double> scores;
  scores.reserve(outputs.size());
  for (const auto& psi : outputs.flat()) scores.push_back(shannon_information(psi, m));
  return preference_from_scores(player, Grid<double>(outputs.rows(), outputs.cols(), std::move(scores)),
                                tie_tol);
}

/// Ranks each output by the position of the first listed state it equals up
/// to phase; `ranked_states` is most-preferred first. Every output must match.
inline Preference ordering_pref(const OutputTable& outputs, std::span<const StateVector> ranked_states,
                                Player player, double tol = TIE_TOL) {
  std::vector<int> positions;
  positions.reserve(outputs.size());
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const auto& psi = outputs.flat()[k];
    int found = -1;
    for (std::size_t s = 0; s < ranked_states.size(); ++s) {
      if (ranked_states[s].dim() != psi.dim()) {
        throw DimensionMismatch("ordering_pref", ranked_states[s].dim(), psi.dim());
      }
      if (equal_up_to_phase(psi, ranked_states[s], tol)) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) {
      throw ValidationError("ordering preference: output at profile " + std::to_string(k) +
                            " matches none of the ranked states");
    }
    positions.push_back(found);
  }
  // Compress positions to consecutive ranks.
  std::vector<int> used = positions;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& p : positions)
    p = static_cast<int>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
  return Preference{player, Grid<int>(outputs.rows(), outputs.cols(), std::move(positions)), std::nullopt};
}

// ---------------------------------------------------------------------------

struct MeasurementSpec {
  HermitianObservable observable;
  std::vector<double> weights;
  friend bool operator==(const MeasurementSpec&, const MeasurementSpec&) = default;
};
struct DistanceGlobalSpec {
  StateVector gamma;
  friend bool operator==(const DistanceGlobalSpec&, const DistanceGlobalSpec&) = default;
};
struct DistanceLocalSpec {
  StateVector gamma;
  friend bool operator==(const DistanceLocalSpec&, const DistanceLocalSpec&) = default;
};
struct VarianceSpec {
  HermitianObservable observable;
  friend bool operator==(const VarianceSpec&, const VarianceSpec&) = default;
};
struct InfoSpec {
  HermitianObservable observable;
  friend bool operator==(const InfoSpec&, const InfoSpec&) = default;
};
struct OrderingSpec {
  std::vector<StateVector> states;  // most preferred first
  friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;
};

using PreferenceSpec = std::variant<MeasurementSpec, DistanceGlobalSpec, DistanceLocalSpec,
                                    VarianceSpec, InfoSpec, OrderingSpec>;

inline const char* variant_tag(const PreferenceSpec& spec) {
  static constexpr const char* kTags[] = {"measurement", "distance_global", "distance_local",
                                          "variance",    "info",            "ordering"};
  return kTags[spec.index()];
}

namespace detail {
template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;
}  // namespace detail

/// Runs whichever rule `spec` names for `player`.
inline Preference make_preference(const OutputTable& outputs, const PreferenceSpec& spec, Player player,
                                  double tie_tol = TIE_TOL) {
  const std::size_t dim = outputs.flat().empty() ? 0 : outputs.flat().front().dim();
  auto check_dim = [&](std::size_t d) {
    if (d != dim) throw DimensionMismatch(std::string("preference spec '") + variant_tag(spec) + "'", d, dim);
  };
  return std::visit(
      detail::Overloaded{
          [&](const MeasurementSpec& s) {
            check_dim(s.observable.dim());
            return induced_preference_for(outputs, s.observable, s.weights, player, tie_tol);
          },
          [&](const DistanceGlobalSpec& s) {
            check_dim(s.gamma.dim());
            return distance_pref_global(outputs, s.gamma, player, tie_tol);
          },
          [&](const DistanceLocalSpec& s) {
            check_dim(s.gamma.dim());
            return distance_pref_local(outputs, s.gamma, player, tie_tol);
          },
          [&](const VarianceSpec& s) {
            check_dim(s.observable.dim());
            return variance_pref(outputs, s.observable, player, tie_tol);
          },
          [&](const InfoSpec& s) {
            check_dim(s.observable.dim());
            return info_pref(outputs, s.observable, player, tie_tol);
          },
          [&](const OrderingSpec& s) {
            if (s.states.empty()) throw ValidationError("ordering preference: no states listed");
            return ordering_pref(outputs, s.states, player, tie_tol);
          },
      },
      spec);
}

}  // namespace dqg
