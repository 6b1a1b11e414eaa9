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
 * Ready-made games: quantum Prisoner's Dilemma, EWL-style entangled games,
 * a time-evolution game, a pair of games sharing output-state preferences
 * but differing in equilibrium, plus the measurement bases they use.
 *
 * Two-qubit registers are ordered particle 1 (player A's) first, so
 * |01> means particle 1 up, particle 2 flipped.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqg/equilibrium.hpp"
#include "dqg/errors.hpp"
#include "dqg/game.hpp"
#include "dqg/preferences.hpp"
#include "dqg/quantum_core.hpp"
#include "dqg/random.hpp"

namespace dqg::catalog {

struct ExpectedEquilibrium {
  Profile profile;
  StateVector state;
};

struct CatalogEntry {
  std::string name;
  GameDefinition game;
  PreferenceSpec pref_a;
  PreferenceSpec pref_b;
  std::optional<ExpectedEquilibrium> expected;
  // Player A's ordering over operation pairs, where it is worth checking.
  std::optional<Grid<int>> expected_profile_ranks_a;
};

/// Computational basis with outcome labels 0..dim-1 as eigenvalues.
inline HermitianObservable computational_measurement(std::size_t dim) {
  std::vector<StateVector> basis;
  std::vector<double> labels;
  for (std::size_t k = 0; k < dim; ++k) {
    basis.push_back(StateVector::basis(dim, k));
    labels.push_back(static_cast<double>(k));
  }
  return HermitianObservable(std::move(basis), std::move(labels));
}

/// Spin measured at angle theta from z on both particles. Per particle the
/// eigenstates are cos(theta/2)|0> + sin(theta/2)|1> and its complement.
inline HermitianObservable rotated_measurement(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const StateVector up({c, s});
  const StateVector down({-s, c});
  const StateVector single[2] = {up, down};
  std::vector<StateVector> basis;
  for (const auto& first : single)
    for (const auto& second : single) basis.push_back(tensor(first, second));
  return HermitianObservable(std::move(basis), {0.0, 1.0, 2.0, 3.0});
}

/// Two observables with mutually unbiased eigenbases (every cross overlap
/// is 1/dim): computational and Hadamard-transformed.
inline std::pair<HermitianObservable, HermitianObservable> mub_pair(std::size_t dim) {
  const double r = 1.0 / std::numbers::sqrt2;
  if (dim == 2) {
    return {HermitianObservable({StateVector::ket("0"), StateVector::ket("1")}, {1.0, -1.0}),
            HermitianObservable({StateVector({r, r}), StateVector({r, -r})}, {1.0, -1.0})};
  }
  if (dim == 4) {
    const UnitaryOp hh = tensor(gates::h(), gates::h());
    std::vector<StateVector> hadamard;
    for (std::size_t k = 0; k < 4; ++k) hadamard.push_back(apply(hh, StateVector::basis(4, k)));
    return {computational_measurement(4), HermitianObservable(std::move(hadamard), {0.0, 1.0, 2.0, 3.0})};
  }
  throw ValidationError("mub_pair: unsupported dim " + std::to_string(dim) + " (only 2 and 4)");
}

// ---------------------------------------------------------------------------

inline const std::vector<double>& pd_weights_a() {
  static const std::vector<double> w{3.0, 0.0, 5.0, 1.0};
  return w;
}
inline const std::vector<double>& pd_weights_b() {
  static const std::vector<double> w{3.0, 5.0, 0.0, 1.0};
  return w;
}
inline OutcomeWeights pd_weights() { return OutcomeWeights{pd_weights_a(), pd_weights_b(), std::nullopt}; }

/// Prisoner's Dilemma on two spin-1/2 particles: each player may flip their
/// own particle; spin-z measurement with payoffs (3,3) (0,5) (5,0) (1,1).
inline CatalogEntry pd_quantum() {
  GameDefinition g{StateVector::ket("00"),
                   {gates::identity(4), gates::flip(0, 2)},
                   {gates::identity(4), gates::flip(1, 2)},
                   PlayOrder::B_FIRST};
  const auto m = computational_measurement(4);
  return CatalogEntry{"pd",
                      std::move(g),
                      MeasurementSpec{m, pd_weights_a()},
                      MeasurementSpec{m, pd_weights_b()},
                      ExpectedEquilibrium{{1, 1}, StateVector::ket("11")},
                      std::nullopt};
}

/// exp(i gamma X(x)X / 2) = cos(gamma/2) I + i sin(gamma/2) X(x)X.
inline UnitaryOp ewl_entangler(double gamma) {
  const Matrix xx = tensor(gates::x().matrix(), gates::x().matrix());
  return UnitaryOp(Complex{std::cos(gamma / 2)} * Matrix::identity(4) + (kI * std::sin(gamma / 2)) * xx);
}

/// Twelve single-qubit strategies used for the grid-limited Bell-state scan.
inline std::vector<UnitaryOp> ewl_reference_grid() {
  const double pi = std::numbers::pi;
  return {gates::identity(2),     gates::x(),           gates::y(),
          gates::z(),             gates::h(),           gates::ry(pi / 3),
          gates::ry(2 * pi / 3),  gates::rx(pi / 3),    gates::rx(2 * pi / 3),
          gates::rz(pi / 3),      gates::h() * gates::rz(pi / 3), gates::ry(pi / 4)};
}

/// EWL protocol as a direct game: A holds E^-1 (U (x) I) E, B holds
/// E^-1 (I (x) U) E, acting on |00>; PD measurement and weights attached.
inline CatalogEntry ewl_game(double gamma, const std::vector<UnitaryOp>& grid_a,
                             const std::vector<UnitaryOp>& grid_b) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2)) {
    throw ValidationError("ewl_game: gamma must lie in [0, pi/2]");
  }
  if (grid_a.empty() || grid_b.empty()) throw ValidationError("ewl_game: empty strategy grid");
  const UnitaryOp e = ewl_entangler(gamma);
  const UnitaryOp e_inv = e.adjoint();
  const UnitaryOp id = gates::identity(2);
  GameDefinition g{StateVector::ket("00"), {}, {}, PlayOrder::B_FIRST};
  for (const auto& u : grid_a) {
    if (u.dim() != 2) throw DimensionMismatch("ewl_game grid_a", u.dim(), 2);
    g.ops_a.push_back(e_inv * tensor(u, id) * e);
  }
  for (const auto& u : grid_b) {
    if (u.dim() != 2) throw DimensionMismatch("ewl_game grid_b", u.dim(), 2);
    g.ops_b.push_back(e_inv * tensor(id, u) * e);
  }
  const auto m = computational_measurement(4);
  return CatalogEntry{"ewl", std::move(g), MeasurementSpec{m, pd_weights_a()},
                      MeasurementSpec{m, pd_weights_b()}, std::nullopt, std::nullopt};
}

inline std::vector<StateVector> bell_states() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {StateVector({r, 0.0, 0.0, r}), StateVector({r, 0.0, 0.0, -r}), StateVector({0.0, r, r, 0.0}),
          StateVector({0.0, r, -r, 0.0})};
}

// ---------------------------------------------------------------------------

struct TimeEvolutionStates {
  StateVector initial;  // psi(0)
  StateVector plus;     // exp(-it(H+dH)/2) psi(0)
  StateVector minus;    // exp(-it(H-dH)/2) psi(0)
  StateVector evolved;  // exp(-iHt) psi(0)
};

namespace detail {
inline void require_shared_eigenbasis(const HermitianObservable& h, const HermitianObservable& dh) {
  if (h.dim() != dh.dim()) throw DimensionMismatch("time_evolution_game", h.dim(), dh.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    if (!equal_up_to_phase(h.basis()[k], dh.basis()[k], NORM_TOL)) {
      throw MismatchedEigenbases("MismatchedEigenbases: H and dH differ at eigenvector " + std::to_string(k));
    }
  }
}

inline std::pair<HermitianObservable, HermitianObservable> half_sum_and_difference(
    const HermitianObservable& h, const HermitianObservable& dh) {
  std::vector<double> plus, minus;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    plus.push_back((h.eigenvalues()[k] + dh.eigenvalues()[k]) / 2);
    minus.push_back((h.eigenvalues()[k] - dh.eigenvalues()[k]) / 2);
  }
  return {h.with_eigenvalues(std::move(plus)), h.with_eigenvalues(std::move(minus))};
}
}  // namespace detail

inline TimeEvolutionStates time_evolution_states(const HermitianObservable& h, const HermitianObservable& dh,
                                                 double t, const StateVector& psi0) {
  detail::require_shared_eigenbasis(h, dh);
  const auto [plus, minus] = detail::half_sum_and_difference(h, dh);
  return {psi0, apply(evolve(plus, t), psi0), apply(evolve(minus, t), psi0), apply(evolve(h, t), psi0)};
}

/// A holds {I, exp(-it(H+dH)/2)}, B holds {I, exp(-it(H-dH)/2)}. H and dH
/// must share an eigenbasis (they commute). Preferences:
///   A: psi+ > psi(t) > psi(0) > psi-
///   B: psi- > psi(0) > psi(t) > psi+
inline CatalogEntry time_evolution_game(const HermitianObservable& h, const HermitianObservable& dh, double t,
                                        const StateVector& psi0) {
  detail::require_shared_eigenbasis(h, dh);
  if (psi0.dim() != h.dim()) throw DimensionMismatch("time_evolution_game psi0", psi0.dim(), h.dim());
  const auto [plus, minus] = detail::half_sum_and_difference(h, dh);
  const std::size_t d = h.dim();
  GameDefinition g{psi0, {UnitaryOp::identity(d), evolve(plus, t)}, {UnitaryOp::identity(d), evolve(minus, t)},
                   PlayOrder::B_FIRST};
  const auto s = time_evolution_states(h, dh, t, psi0);
  return CatalogEntry{"time-evolution",
                      std::move(g),
                      OrderingSpec{{s.plus, s.evolved, s.initial, s.minus}},
                      OrderingSpec{{s.minus, s.initial, s.evolved, s.plus}},
                      ExpectedEquilibrium{{1, 1}, s.evolved},
                      std::nullopt};
}

/// Qubit instance: H = 0.2 Z, dH = Z, t = 1, psi(0) = |+>.
inline CatalogEntry time_evolution_default() {
  const HermitianObservable h({StateVector::ket("0"), StateVector::ket("1")}, {0.2, -0.2});
  const HermitianObservable dh = h.with_eigenvalues({1.0, -1.0});
  const double r = 1.0 / std::numbers::sqrt2;
  return time_evolution_game(h, dh, 1.0, StateVector({r, r}));
}

// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kCrossedFlipsAlphaSeed = 20130611;

/// Fixed pseudo-random two-qubit unitary used when no alpha is supplied.
inline UnitaryOp default_alpha() {
  random::Rng rng(kCrossedFlipsAlphaSeed);
  return random::unitary(4, rng);
}

/// Two games with the same output states and the same preferences over
/// them (A: |00> > |01> > |10> > |11>, B the reverse) but different
/// equilibria. The first gives each player their own flip; the second
/// hands A {alpha, F2 alpha} and B {alpha^-1, alpha^-1 F1}.
inline std::pair<CatalogEntry, CatalogEntry> flip_games(const std::optional<UnitaryOp>& alpha = std::nullopt) {
  const UnitaryOp a = alpha ? *alpha : default_alpha();
  if (a.dim() != 4) throw DimensionMismatch("flip_games alpha", a.dim(), 4);
  const UnitaryOp f1 = gates::flip(0, 2);
  const UnitaryOp f2 = gates::flip(1, 2);
  const UnitaryOp id = gates::identity(4);
  const UnitaryOp a_inv = a.adjoint();

  const std::vector<StateVector> order_a{StateVector::ket("00"), StateVector::ket("01"), StateVector::ket("10"),
                                         StateVector::ket("11")};
  const std::vector<StateVector> order_b(order_a.rbegin(), order_a.rend());

  CatalogEntry own{"flips",
                   GameDefinition{StateVector::ket("00"), {id, f1}, {id, f2}, PlayOrder::B_FIRST},
                   OrderingSpec{order_a},
                   OrderingSpec{order_b},
                   ExpectedEquilibrium{{0, 1}, StateVector::ket("01")},
                   Grid<int>(2, 2, std::vector<int>{0, 1, 2, 3})};
  CatalogEntry crossed{"crossed-flips",
                       GameDefinition{StateVector::ket("00"), {a, f2 * a}, {a_inv, a_inv * f1}, PlayOrder::B_FIRST},
                       OrderingSpec{order_a},
                       OrderingSpec{order_b},
                       ExpectedEquilibrium{{0, 1}, StateVector::ket("10")},
                       Grid<int>(2, 2, std::vector<int>{0, 2, 1, 3})};
  return {std::move(own), std::move(crossed)};
}

// ---------------------------------------------------------------------------

struct GlobalLocalExample {
  OutputTable outputs;  // 3 x 1: psi1, psi2, psi3
  StateVector gamma;    // |0>
};

/// Single-qubit outputs psi1 = a|0> + b|1>, psi2 = b|0> - a|1>,
/// psi3 = c|0> + d|1> with d = sqrt(1 - c^2), on which global- and
/// local-distance preferences disagree. Requires a^2 + b^2 = 1 and
/// a^2 > b^2 > c^2.
inline GlobalLocalExample global_local_example(double a, double b, double c) {
  if (std::abs(a * a + b * b - 1.0) > NORM_TOL) throw ValidationError("global_local_example: need a^2 + b^2 = 1");
  if (!(a * a > b * b && b * b > c * c)) throw ValidationError("global_local_example: need a^2 > b^2 > c^2");
  const double d = std::sqrt(1.0 - c * c);
  return {OutputTable(3, 1, {StateVector({a, b}), StateVector({b, -a}), StateVector({c, d})}),
          StateVector::ket("0")};
}

/// The same three states as a playable 3 x 1 game: A chooses among the
/// rotations taking |0> to each psi_k, B has only the identity. A ranks by
/// global distance to |0>, B by local distance, so both chains show up in
/// one solve.
inline CatalogEntry global_local_game(double a = 0.8, double b = 0.6, double c = 0.5) {
  const auto ex = global_local_example(a, b, c);
  GameDefinition g{StateVector::ket("0"), {}, {gates::identity(2)}, PlayOrder::B_FIRST};
  for (const auto& psi : ex.outputs.flat()) {
    const double x = psi[0].real(), y = psi[1].real();
    g.ops_a.push_back(UnitaryOp(Matrix(2, {x, -y, y, x})));
  }
  return CatalogEntry{"global-local", std::move(g), DistanceGlobalSpec{ex.gamma}, DistanceLocalSpec{ex.gamma},
                      ExpectedEquilibrium{{0, 0}, ex.outputs(0, 0)}, std::nullopt};
}

// ---------------------------------------------------------------------------

struct CatalogOptions {
  double gamma = 0.0;  // ewl only
  std::optional<std::uint64_t> alpha_seed;  // crossed-flips only
};

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"pd", "ewl", "time-evolution", "flips", "crossed-flips", "global-local"};
  return names;
}

inline CatalogEntry make_entry(std::string_view name, const CatalogOptions& opts = {}) {
  if (name == "pd") return pd_quantum();
  if (name == "ewl") return ewl_game(opts.gamma, {gates::identity(2), gates::x()}, {gates::identity(2), gates::x()});
  if (name == "time-evolution") return time_evolution_default();
  if (name == "flips" || name == "crossed-flips") {
    std::optional<UnitaryOp> alpha;
    if (opts.alpha_seed) {
      random::Rng rng(*opts.alpha_seed);
      alpha = random::unitary(4, rng);
    }
    auto games = flip_games(alpha);
    return name == "flips" ? std::move(games.first) : std::move(games.second);
  }
  if (name == "global-local") return global_local_game();
  throw ValidationError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace dqg::catalog
