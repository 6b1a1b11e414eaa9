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

// Randomized check that ranking outputs by squared overlap with a state phi
// gives the same weak order as the expected payoff of a measurement in which
// phi is the only eigenstate paid a and every other eigenstate pays b < a.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dqg/game.hpp"
#include "dqg/preferences.hpp"
#include "dqg/random.hpp"

namespace dqg {

struct EquivalenceTrial {
  bool ranks_match = false;
  std::size_t profiles = 0;
  Preference by_distance;
  Preference by_payoff;
};

/// Random game with m, n in 1..3 on `dim`; ops are sometimes repeated so
/// that tied outputs occur.
inline GameDefinition random_small_game(std::size_t dim, random::Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 3);
  std::bernoulli_distribution repeat(0.25);
  GameDefinition g{random::state(dim, rng), {}, {}, PlayOrder::B_FIRST};
  const std::size_t m = size(rng), n = size(rng);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && repeat(rng)) g.ops_a.push_back(g.ops_a.back());
    else g.ops_a.push_back(random::unitary(dim, rng));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0 && repeat(rng)) g.ops_b.push_back(g.ops_b.back());
    else g.ops_b.push_back(random::unitary(dim, rng));
  }
  return g;
}

inline EquivalenceTrial run_equivalence_trial(std::size_t dim, random::Rng& rng, double tie_tol = TIE_TOL) {
  const OutputTable outputs = build_outputs(random_small_game(dim, rng));
  const HermitianObservable m = random::observable(dim, rng);
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_real_distribution<double> low(-5.0, 5.0), gap(0.1, 5.0);
  const std::size_t preferred = pick(rng);
  const double b = low(rng);
  const double a = b + gap(rng);
  const Player player = std::bernoulli_distribution(0.5)(rng) ? Player::A : Player::B;

  const OutcomeWeights w = strictly_competitive_weights(m, preferred, a, b, player);
  EquivalenceTrial trial;
  trial.profiles = outputs.size();
  trial.by_payoff = induced_preference_for(outputs, m, w.column(player), player, tie_tol);
  trial.by_distance = distance_pref_global(outputs, m.basis()[preferred], player, tie_tol);
  trial.ranks_match = trial.by_payoff.ranks == trial.by_distance.ranks;
  return trial;
}

struct EquivalenceSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t trials_with_ties = 0;
};

inline EquivalenceSummary run_equivalence_suite(std::size_t dim, std::size_t trials, std::uint64_t seed,
                                                double tie_tol = TIE_TOL) {
  if (dim == 0) throw ValidationError("equiv-check: dim must be >= 1");
  random::Rng rng(seed);
  EquivalenceSummary s;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto trial = run_equivalence_trial(dim, rng, tie_tol);
    ++s.trials;
    if (!trial.ranks_match) ++s.failures;
    const auto& r = trial.by_distance.ranks.flat();
    const int top = *std::max_element(r.begin(), r.end());
    if (static_cast<std::size_t>(top) + 1 < r.size()) ++s.trials_with_ties;
  }
  return s;
}

}  // namespace dqg
