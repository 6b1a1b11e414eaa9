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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dqg/dqg.hpp"
#include "oracles.hpp"

using namespace dqg;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Grid<double> grid(std::size_t r, std::size_t c, std::vector<double> v) { return Grid<double>(r, c, std::move(v)); }

StateVector dense_apply(const oracle::Dense& u, const StateVector& psi) {
  std::vector<Complex> out(psi.dim());
  for (std::size_t r = 0; r < psi.dim(); ++r)
    for (std::size_t c = 0; c < psi.dim(); ++c) out[r] += u[r][c] * psi[c];
  return StateVector(std::move(out), 1e-8);
}

oracle::Dense dense(const Matrix& m) {
  oracle::Dense d(m.dim(), std::vector<oracle::C>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) d[r][c] = m(r, c);
  return d;
}

// 1. Prisoner's dilemma reproduction.
Outcome pd_reproduction() {
  Outcome o;
  const auto entry = catalog::pd_quantum();
  const auto outputs = build_outputs(entry.game);
  const auto [pa, pb] = induced_preference(outputs, catalog::computational_measurement(4), catalog::pd_weights());
  o.require(*pa.cardinal == grid(2, 2, {3, 0, 5, 1}), "cardinal A differs");
  o.require(*pb.cardinal == grid(2, 2, {3, 5, 0, 1}), "cardinal B differs");
  o.require(render::rank_chain(pa) == "ψ3 ≻ ψ1 ≻ ψ4 ≻ ψ2", "ordering A " + render::rank_chain(pa));
  o.require(render::rank_chain(pb) == "ψ2 ≻ ψ1 ≻ ψ4 ≻ ψ3", "ordering B " + render::rank_chain(pb));
  const auto rep = solve(entry.game, entry.pref_a, entry.pref_b);
  o.require(rep.equilibrium.equilibria == std::vector<Profile>{{1, 1}}, "equilibrium is not unique (2,2)");
  if (rep.equilibrium.exists()) {
    o.require(equal_up_to_phase(rep.equilibrium.states[0], StateVector::ket("11"), kTol), "state is not |11>");
    o.require(rep.equilibrium.payoffs && (*rep.equilibrium.payoffs)[0] == std::make_pair(1.0, 1.0),
              "payoffs are not (1,1)");
  }
  o.detail = o.pass ? "cardinals exact, orderings match, unique |11> with payoffs (1,1)" : o.detail;
  return o;
}

// 2. Same output-state preferences, two mappings, 20 random alphas.
Outcome two_games() {
  Outcome o;
  random::Rng rng(2002);
  for (int t = 0; t < 20 && o.pass; ++t) {
    const auto [own, crossed] = catalog::flip_games(random::unitary(4, rng));
    const auto ra = solve(own.game, own.pref_a, own.pref_b).equilibrium;
    o.require(ra.equilibria == std::vector<Profile>{{0, 1}}, "first mapping equilibrium differs");
    if (ra.exists()) o.require(overlap2(ra.states[0], StateVector::ket("01")) >= 1 - kTol, "first state not |01>");
    const auto rb = solve(crossed.game, crossed.pref_a, crossed.pref_b).equilibrium;
    o.require(rb.equilibria == std::vector<Profile>{{0, 1}}, "second mapping equilibrium differs");
    if (rb.exists()) o.require(overlap2(rb.states[0], StateVector::ket("10")) >= 1 - kTol, "second state not |10>");
  }
  if (o.pass) o.detail = "20 alphas: |01> for the first mapping, |10> for the second";
  return o;
}

// 3. Global vs local distance chains.
Outcome global_local() {
  Outcome o;
  const auto ex = catalog::global_local_example(0.8, 0.6, 0.5);
  const auto g = distance_pref_global(ex.outputs, ex.gamma, Player::A);
  const auto l = distance_pref_local(ex.outputs, ex.gamma, Player::A);
  o.require(render::rank_chain(g) == "ψ1 ≻ ψ2 ≻ ψ3", "global chain " + render::rank_chain(g));
  o.require(render::rank_chain(l) == "ψ1 ≻ ψ3 ≻ ψ2", "local chain " + render::rank_chain(l));
  if (o.pass) o.detail = "global ψ1 ≻ ψ2 ≻ ψ3, local ψ1 ≻ ψ3 ≻ ψ2";
  return o;
}

// 4. Distance vs strictly-competitive payoff ranking, 200 trials per dim.
Outcome equivalence() {
  Outcome o;
  std::size_t ties = 0, trials = 0;
  for (std::size_t dim : {2U, 4U, 8U}) {
    random::Rng rng(4000 + dim);
    std::uniform_int_distribution<std::size_t> size(1, 3), pick(0, dim - 1);
    std::uniform_real_distribution<double> low(-10.0, 10.0), gap(1e-3, 10.0);
    std::bernoulli_distribution reuse(0.3), coin(0.5);
    for (int t = 0; t < 200; ++t) {
      const std::size_t m = size(rng), n = size(rng);
      std::vector<StateVector> pool;
      std::vector<StateVector> states;
      for (std::size_t k = 0; k < m * n; ++k) {
        if (!pool.empty() && reuse(rng)) {
          states.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        } else {
          states.push_back(random::state(dim, rng));
          pool.push_back(states.back());
        }
      }
      const OutputTable outputs(m, n, states);
      const auto basis = random::orthonormal_basis(dim, rng);
      const HermitianObservable meas(basis, std::vector<double>(dim, 0.0));
      const std::size_t phi = pick(rng);
      const double b = low(rng), a = b + gap(rng);
      const Player player = coin(rng) ? Player::A : Player::B;
      const auto w = strictly_competitive_weights(meas, phi, a, b, player);
      const auto by_payoff = induced_preference_for(outputs, meas, w.column(player), player);
      const auto by_distance = distance_pref_global(outputs, basis[phi], player);
      ++trials;
      const auto& r = by_distance.ranks.flat();
      if (static_cast<std::size_t>(*std::max_element(r.begin(), r.end())) + 1 < r.size()) ++ties;
      o.require(by_payoff.ranks == by_distance.ranks, "rank grids differ at dim " + std::to_string(dim));
    }
  }
  o.require(ties > 0, "no trial contained ties");
  if (o.pass) o.detail = std::to_string(trials) + " trials, " + std::to_string(ties) + " with ties, 0 failures";
  return o;
}

// 5. Time-evolution game, 50 random draws in dims 2..8.
Outcome time_evolution() {
  Outcome o;
  random::Rng rng(5005);
  std::uniform_int_distribution<std::size_t> dims(2, 8);
  std::uniform_real_distribution<double> eig(-2.0, 2.0), time(0.1, 3.0);
  double worst = 1.0;
  for (int t = 0; t < 50 && o.pass; ++t) {
    const std::size_t d = dims(rng);
    const auto h = random::observable(d, rng);
    std::vector<double> dv(d);
    for (auto& x : dv) x = eig(rng);
    const auto dh = h.with_eigenvalues(dv);
    const double tt = time(rng);
    const auto psi0 = random::state(d, rng);
    const auto entry = catalog::time_evolution_game(h, dh, tt, psi0);
    const auto eq = solve(entry.game, entry.pref_a, entry.pref_b).equilibrium;
    o.require(eq.equilibria.size() == 1, "equilibrium not unique");
    if (eq.equilibria.size() != 1) break;
    const auto want = dense_apply(oracle::expm_minus_i(dense(h.matrix()), tt), psi0);
    const double f = overlap2(eq.states[0], want);
    worst = std::min(worst, f);
    o.require(f >= 1 - kTol, "fidelity " + std::to_string(f));
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "50 draws, unique equilibrium, min fidelity 1 - %.1e", 1 - worst);
    o.detail = buf;
  }
  return o;
}

// 6. EWL protocol checks.
Outcome ewl() {
  Outcome o;
  const auto classic = catalog::ewl_game(0.0, {gates::identity(), gates::x()}, {gates::identity(), gates::x()});
  const auto rep = solve(classic.game, classic.pref_a, classic.pref_b);
  o.require(*rep.pref_a.cardinal == grid(2, 2, {3, 0, 5, 1}) && *rep.pref_b.cardinal == grid(2, 2, {3, 5, 0, 1}),
            "(a) gamma=0 payoffs differ");
  o.require(rep.equilibrium.payoffs && rep.equilibrium.payoffs->size() == 1 &&
                rep.equilibrium.payoffs->front() == std::make_pair(1.0, 1.0),
            "(a) gamma=0 equilibrium payoffs differ");

  random::Rng rng(6006);
  std::uniform_real_distribution<double> gamma(0.0, std::numbers::pi / 2);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto e = catalog::ewl_game(gamma(rng), {random::unitary(2, rng)}, {random::unitary(2, rng)});
    worst = std::max(worst, commutator_norm(e.game.ops_a[0], e.game.ops_b[0]));
  }
  o.require(worst < kTol, "(b) commutator norm " + std::to_string(worst));

  const auto g = catalog::ewl_reference_grid();
  const auto outputs = build_outputs(catalog::ewl_game(std::numbers::pi / 2, g, g).game);
  double best = 0.0;
  for (const auto& psi : outputs.flat())
    for (const auto& bell : catalog::bell_states()) best = std::max(best, overlap2(psi, bell));
  o.require(g.size() == 12 && best < 1 - kTol, "(c) Bell overlap " + std::to_string(best));
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "(a) classical payoffs, (b) max commutator %.1e, (c) max Bell overlap %.4f on 144 profiles",
                  worst, best);
    o.detail = buf;
  }
  return o;
}

// 7. Total tie under the x-basis measurement.
Outcome total_tie() {
  Outcome o;
  const auto outputs = build_outputs(catalog::pd_quantum().game);
  const auto [pa, pb] =
      induced_preference(outputs, catalog::rotated_measurement(std::numbers::pi / 2), catalog::pd_weights());
  for (std::size_t k = 0; k < 4; ++k) {
    o.require(std::abs(pa.cardinal->flat()[k] - 9.0 / 4) <= kTol, "A payoff not 9/4");
    o.require(std::abs(pb.cardinal->flat()[k] - 9.0 / 4) <= kTol, "B payoff not 9/4");
  }
  o.require(pure_nash(pa, pb).equilibria.size() == 4, "not all four profiles are equilibria");
  if (o.pass) o.detail = "all payoffs 9/4, four equilibria";
  return o;
}

// 8. pure_nash vs best-response oracle.
Outcome oracle_equivalence() {
  Outcome o;
  random::Rng rng(8008);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> small(0, 3);
  std::normal_distribution<double> real(0.0, 1.0);
  for (int t = 0; t < 1000 && o.pass; ++t) {
    const std::size_t m = size(rng), n = size(rng);
    oracle::Table a(m, std::vector<double>(n)), b(m, std::vector<double>(n));
    std::vector<double> fa, fb;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = t % 2 ? small(rng) : real(rng);
        b[i][j] = t % 2 ? small(rng) : real(rng);
        fa.push_back(a[i][j]);
        fb.push_back(b[i][j]);
      }
    const auto eq = pure_nash(preference_from_scores(Player::A, grid(m, n, fa), TIE_TOL),
                              preference_from_scores(Player::B, grid(m, n, fb), TIE_TOL));
    std::vector<Profile> want;
    for (const auto& [i, j] : oracle::best_response_equilibria(a, b)) want.push_back({i, j});
    o.require(eq.equilibria == want, "mismatch on instance " + std::to_string(t));
  }
  if (o.pass) o.detail = "1000 grids up to 4x4, all match";
  return o;
}

// 9. Affine invariance of induced ranks.
Outcome affine() {
  Outcome o;
  random::Rng rng(9009);
  std::uniform_real_distribution<double> weight(-5.0, 5.0), scale(0.01, 20.0);
  std::uniform_int_distribution<std::size_t> dims(2, 6);
  for (int t = 0; t < 200 && o.pass; ++t) {
    const std::size_t d = dims(rng);
    const auto outputs = build_outputs(random_small_game(d, rng));
    const auto meas = random::observable(d, rng);
    std::vector<double> w(d), w2(d);
    for (auto& x : w) x = weight(rng);
    const double c = scale(rng), shift = weight(rng);
    for (std::size_t k = 0; k < d; ++k) w2[k] = c * w[k] + shift;
    o.require(induced_preference_for(outputs, meas, w, Player::A).ranks ==
                  induced_preference_for(outputs, meas, w2, Player::A).ranks,
              "ranks changed on instance " + std::to_string(t));
  }
  if (o.pass) o.detail = "200 instances, rank grids unchanged";
  return o;
}

// 10. Reverse engineering on the time-evolution game.
Outcome reverse() {
  Outcome o;
  const HermitianObservable h({StateVector::ket("0"), StateVector::ket("1")}, {0.2, -0.2});
  const auto dh = h.with_eigenvalues({1.0, -1.0});
  const double r = 1.0 / std::numbers::sqrt2;
  const StateVector psi0({r, r});
  const auto entry = catalog::time_evolution_game(h, dh, 1.0, psi0);
  const auto s = catalog::time_evolution_states(h, dh, 1.0, psi0);
  random::Rng rng(1010);
  std::vector<std::pair<StateVector, StateVector>> cands{
      {s.evolved, s.evolved}, {s.initial, s.initial}, {s.minus, s.plus}, {s.plus, s.minus}, {s.plus, s.initial}};
  while (cands.size() < 10) cands.emplace_back(random::state(2, rng), random::state(2, rng));
  const Profile target{1, 1};
  const auto accepted = reverse_engineer_distance(entry.game, target, cands);
  bool found = false;
  for (const auto& [pa, pb] : accepted) {
    found = found || (pa == s.plus && pb == s.minus);
    const auto eq = solve(entry.game, DistanceGlobalSpec{pa}, DistanceGlobalSpec{pb}).equilibrium;
    o.require(eq.equilibria == std::vector<Profile>{target}, "accepted pair does not solve to (2,2)");
  }
  o.require(found, "(psi+, psi-) not accepted");
  if (o.pass) o.detail = std::to_string(accepted.size()) + " of 10 accepted, (ψ+, ψ−) among them, all solve to (2,2)";
  return o;
}

// Game count under the ((mn)!)^2 reading.
Outcome game_count() {
  Outcome o;
  o.require(count_games(1, 1) == 1, "count_games(1,1)");
  o.require(count_games(2, 2) == 576, "count_games(2,2)");
  o.require(enumerate_orderings(2, 2, {0, 0}).pairs_enumerated == 576, "enumeration count");
  if (o.pass) o.detail = "count_games(1,1) = 1, count_games(2,2) = 576";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 prisoner's dilemma", pd_reproduction},
      {"2 two mappings, same preferences", two_games},
      {"3 global vs local distance", global_local},
      {"4 equivalence theorem", equivalence},
      {"5 time-evolution game", time_evolution},
      {"6 EWL checks", ewl},
      {"7 total tie", total_tie},
      {"8 equilibrium oracle", oracle_equivalence},
      {"9 affine invariance", affine},
      {"10 reverse engineering", reverse},
      {"count games", game_count},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
