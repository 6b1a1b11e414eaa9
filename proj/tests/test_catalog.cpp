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

#include <gtest/gtest.h>

#include <numbers>

#include "dqg/catalog.hpp"
#include "dqg/equilibrium.hpp"
#include "dqg/random.hpp"

using namespace dqg;

TEST(Ewl, ZeroEntanglementIsClassical) {
  const auto entry = catalog::make_entry("ewl", {0.0, std::nullopt});
  const auto rep = solve(entry.game, entry.pref_a, entry.pref_b);
  EXPECT_EQ(*rep.pref_a.cardinal, Grid<double>(2, 2, std::vector<double>{3, 0, 5, 1}));
  EXPECT_EQ(*rep.pref_b.cardinal, Grid<double>(2, 2, std::vector<double>{3, 5, 0, 1}));
  EXPECT_EQ(rep.equilibrium.equilibria, (std::vector<Profile>{{1, 1}}));
}

TEST(Ewl, EffectiveOperationsCommute) {
  random::Rng rng(101);
  std::uniform_real_distribution<double> gamma(0.0, std::numbers::pi / 2);
  for (int t = 0; t < 50; ++t) {
    const auto e = catalog::ewl_game(gamma(rng), {random::unitary(2, rng)}, {random::unitary(2, rng)});
    EXPECT_LT(commutator_norm(e.game.ops_a[0], e.game.ops_b[0]), 1e-9);
  }
}

TEST(Ewl, EntanglerAtHalfPiMakesBellState) {
  const auto e = catalog::ewl_entangler(std::numbers::pi / 2);
  const auto out = apply(e, StateVector::ket("00"));
  // (|00> + i|11>)/sqrt2
  EXPECT_NEAR(std::abs(out[0] - Complex(1 / std::numbers::sqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out[3] - Complex(0, 1 / std::numbers::sqrt2)), 0.0, 1e-12);
}

TEST(Ewl, ReferenceGridReachesNoBellState) {
  const auto grid = catalog::ewl_reference_grid();
  ASSERT_EQ(grid.size(), 12U);
  const auto outputs = build_outputs(catalog::ewl_game(std::numbers::pi / 2, grid, grid).game);
  double best = 0.0;
  for (const auto& psi : outputs.flat())
    for (const auto& bell : catalog::bell_states()) best = std::max(best, overlap2(psi, bell));
  EXPECT_LT(best, 1.0 - 1e-9);
}

TEST(Ewl, RejectsGammaOutOfRange) {
  EXPECT_THROW(catalog::ewl_game(2.0, {gates::identity()}, {gates::identity()}), ValidationError);
  EXPECT_THROW(catalog::ewl_game(0.5, {gates::identity(4)}, {gates::identity()}), DimensionMismatch);
}

TEST(TimeEvolution, ZeroTimeCollapsesOutputs) {
  random::Rng rng(55);
  const auto h = random::observable(3, rng);
  const auto dh = h.with_eigenvalues({0.3, -1.0, 2.0});
  const auto psi0 = random::state(3, rng);
  const auto outputs = build_outputs(catalog::time_evolution_game(h, dh, 0.0, psi0).game);
  for (const auto& psi : outputs.flat()) EXPECT_TRUE(equal_up_to_phase(psi, psi0, 1e-12));
}

TEST(TimeEvolution, JointOperationIsFullEvolution) {
  random::Rng rng(56);
  for (int t = 0; t < 20; ++t) {
    const auto h = random::observable(4, rng);
    const auto dh = h.with_eigenvalues({1.0, -0.5, 0.25, 2.0});
    const auto g = catalog::time_evolution_game(h, dh, 1.7, random::state(4, rng)).game;
    EXPECT_LE((g.ops_a[1] * g.ops_b[1]).matrix().max_abs_diff(evolve(h, 1.7).matrix()), 1e-9);
  }
}

TEST(TimeEvolution, MismatchedEigenbases) {
  const HermitianObservable z({StateVector::ket("0"), StateVector::ket("1")}, {1.0, -1.0});
  const double r = 1.0 / std::numbers::sqrt2;
  const HermitianObservable x({StateVector({r, r}), StateVector({r, -r})}, {1.0, -1.0});
  EXPECT_THROW(catalog::time_evolution_game(z, x, 1.0, StateVector::ket("0")), MismatchedEigenbases);
}

TEST(Measurements, RotatedAtZeroIsComputational) {
  const auto m = catalog::rotated_measurement(0.0);
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_TRUE(equal_up_to_phase(m.basis()[k], StateVector::basis(4, k), 1e-12));
}

TEST(Measurements, RotatedHalfPiGivesQuarterOverlaps) {
  const auto m = catalog::rotated_measurement(std::numbers::pi / 2);
  for (std::size_t k = 0; k < 4; ++k)
    for (const auto& e : m.basis()) EXPECT_NEAR(overlap2(StateVector::basis(4, k), e), 0.25, 1e-12);
}

TEST(Measurements, MutuallyUnbiasedPairs) {
  for (std::size_t dim : {2U, 4U}) {
    const auto [p, q] = catalog::mub_pair(dim);
    for (const auto& e : p.basis())
      for (const auto& f : q.basis()) EXPECT_NEAR(overlap2(e, f), 1.0 / dim, 1e-12);
  }
  EXPECT_THROW(catalog::mub_pair(3), ValidationError);
}

TEST(Measurements, MubVarianceOpposes) {
  // Outputs on one basis have zero variance there and maximal spread in the other.
  const auto [z, x] = catalog::mub_pair(2);
  const OutputTable outputs(1, 2, {z.basis()[0], x.basis()[0]});
  EXPECT_EQ(variance_pref(outputs, z, Player::A).ranks, Grid<int>(1, 2, std::vector<int>{0, 1}));
  EXPECT_EQ(variance_pref(outputs, x, Player::B).ranks, Grid<int>(1, 2, std::vector<int>{1, 0}));
}

TEST(FlipGames, AnnotatedRanksMatch) {
  const auto [own, crossed] = catalog::flip_games();
  for (const auto* e : {&own, &crossed}) {
    const auto rep = solve(e->game, e->pref_a, e->pref_b);
    EXPECT_EQ(rep.pref_a.ranks, *e->expected_profile_ranks_a) << e->name;
  }
}

TEST(FlipGames, CrossedGameForRandomAlpha) {
  random::Rng rng(60);
  for (int t = 0; t < 20; ++t) {
    const auto crossed = catalog::flip_games(random::unitary(4, rng)).second;
    const auto out = build_outputs(crossed.game);
    EXPECT_TRUE(equal_up_to_phase(out(0, 0), StateVector::ket("00"), 1e-9));
    EXPECT_TRUE(equal_up_to_phase(out(0, 1), StateVector::ket("10"), 1e-9));
    EXPECT_TRUE(equal_up_to_phase(out(1, 0), StateVector::ket("01"), 1e-9));
    EXPECT_TRUE(equal_up_to_phase(out(1, 1), StateVector::ket("11"), 1e-9));
  }
}

TEST(GlobalLocal, RejectsBadParameters) {
  EXPECT_THROW(catalog::global_local_example(0.8, 0.5, 0.1), ValidationError);
  EXPECT_THROW(catalog::global_local_example(0.6, 0.8, 0.1), ValidationError);
  EXPECT_THROW(catalog::global_local_example(0.8, 0.6, 0.7), ValidationError);
}

TEST(Registry, EveryExpectedAnnotationReproduced) {
  for (const auto& name : catalog::catalog_names()) {
    const auto e = catalog::make_entry(name);
    EXPECT_EQ(e.name, name);
    const auto rep = solve(e.game, e.pref_a, e.pref_b);
    if (!e.expected) continue;
    ASSERT_EQ(rep.equilibrium.equilibria.size(), 1U) << name;
    EXPECT_EQ(rep.equilibrium.equilibria[0], e.expected->profile) << name;
    EXPECT_GE(overlap2(rep.equilibrium.states[0], e.expected->state), 1 - 1e-9) << name;
  }
  EXPECT_THROW(catalog::make_entry("nope"), ValidationError);
}
