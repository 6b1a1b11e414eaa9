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

// Command dispatch for the dqg tool. Kept apart from argument parsing so the
// tests can drive commands directly.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqg/dqg.hpp"

namespace dqg::cli {

enum class Command { Solve, Induce, EquivCheck, OrderCheck, Catalog, Reverse, CountGames };
enum class EmitFormat { Table, Machine };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;

struct RunConfig {
  Command command = Command::Solve;
  std::string game_path;                // solve, induce, order-check, reverse
  std::optional<std::string> out_path;  // machine document written here
  Tolerances tol;
  std::uint64_t seed = 7;
  EmitFormat format = EmitFormat::Table;

  std::optional<std::string> pref_a;  // path or inline JSON
  std::optional<std::string> pref_b;
  std::string measurement;
  std::string weights;
  std::string candidates;
  Profile target;  // 0-based

  std::size_t dim = 4;
  std::size_t trials = 200;

  std::string catalog_name;
  std::optional<std::string> emit_path;
  bool catalog_solve = false;
  double gamma = 0.0;
  std::optional<std::uint64_t> alpha_seed;

  std::size_t m = 2;
  std::size_t n = 2;
};

namespace detail {

using io::Json;

inline void emit(const RunConfig& cfg, const Json& doc, const std::string& table, std::ostream& out) {
  if (cfg.out_path) io::write_file(*cfg.out_path, io::dump(doc));
  if (cfg.format == EmitFormat::Machine) out << io::dump(doc);
  else out << table;
}

inline std::string describe_preferences(const Preference& pa, const Preference& pb) {
  std::string s;
  s += "preferences\n";
  s += "  A: " + render::rank_chain(pa) + "\n";
  s += "  B: " + render::rank_chain(pb) + "\n";
  if (pa.cardinal) s += "cardinal A\n" + render::grid(*pa.cardinal);
  if (pb.cardinal) s += "cardinal B\n" + render::grid(*pb.cardinal);
  return s;
}

inline std::string describe_equilibria(const EquilibriumResult& eq, std::size_t cols) {
  std::string s;
  if (!eq.exists()) return "equilibria: none (no pure-strategy equilibrium)\n";
  s += "equilibria: " + std::to_string(eq.equilibria.size()) + "\n";
  for (std::size_t k = 0; k < eq.equilibria.size(); ++k) {
    const auto& p = eq.equilibria[k];
    s += "  profile " + render::profile(p) + " " + render::psi_label(p, cols);
    if (k < eq.states.size()) s += "  state " + render::state(eq.states[k]);
    if (eq.payoffs) {
      const auto& [a, b] = (*eq.payoffs)[k];
      s += "  payoffs (" + render::fixed4(a) + ", " + render::fixed4(b) + ")";
    }
    s += "\n";
  }
  return s;
}

inline io::ResultDocument make_result(const SolveReport& rep, const std::string& digest, const PreferenceSpec& a,
                                      const PreferenceSpec& b) {
  return io::ResultDocument{rep.equilibrium, rep.pref_a.ranks, rep.pref_b.ranks, rep.pref_a.cardinal,
                            rep.pref_b.cardinal, digest, a, b};
}

inline int solve_and_emit(const RunConfig& cfg, const GameDefinition& g, const PreferenceSpec& a,
                          const PreferenceSpec& b, const std::string& digest, std::string header,
                          std::ostream& out) {
  const SolveReport rep = solve(g, a, b, cfg.tol.tie);
  const io::ResultDocument doc = make_result(rep, digest, a, b);
  std::string table = std::move(header);
  table += "outputs\n" + render::output_table(rep.outputs);
  table += describe_preferences(rep.pref_a, rep.pref_b);
  table += describe_equilibria(rep.equilibrium, rep.outputs.cols());
  emit(cfg, io::to_json(doc), table, out);
  return kExitOk;
}

inline io::GameFile load_game_file(const RunConfig& cfg, std::string& raw) {
  raw = io::read_file(cfg.game_path);
  return io::game_from_json(io::parse(raw, cfg.game_path), cfg.tol);
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  std::string raw;
  const io::GameFile f = load_game_file(cfg, raw);
  std::optional<PreferenceSpec> a = f.pref_a, b = f.pref_b;
  if (cfg.pref_a) a = io::spec_from_json(io::load_document(*cfg.pref_a), "--pref-a", cfg.tol);
  if (cfg.pref_b) b = io::spec_from_json(io::load_document(*cfg.pref_b), "--pref-b", cfg.tol);
  if (!a || !b) throw ValidationError("solve: no preference specification for player " + std::string(a ? "B" : "A"));
  return solve_and_emit(cfg, f.game, *a, *b, "sha256:" + io::sha256_hex(raw), "game " + cfg.game_path + "\n", out);
}

inline int cmd_induce(const RunConfig& cfg, std::ostream& out) {
  std::string raw;
  const io::GameFile f = load_game_file(cfg, raw);
  const HermitianObservable m = io::observable_from_json(io::load_document(cfg.measurement), "--measurement", cfg.tol);
  const Json wj = io::load_document(cfg.weights);
  if (!wj.is_array()) throw ParseError("--weights: expected an array of [w_A, w_B] pairs");
  OutcomeWeights w;
  for (const auto& pair : wj) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("--weights: expected an array of [w_A, w_B] pairs");
    }
    w.a.push_back(pair[0].get<double>());
    w.b.push_back(pair[1].get<double>());
  }
  const OutputTable outputs = build_outputs(f.game);
  const auto [pa, pb] = induced_preference(outputs, m, w, cfg.tol.tie);
  Json doc{{"format", "dqg-induce v1"},
           {"cardinal", Json{{"A", io::grid_to_json(*pa.cardinal)}, {"B", io::grid_to_json(*pb.cardinal)}}},
           {"ranks", Json{{"A", io::grid_to_json(pa.ranks)}, {"B", io::grid_to_json(pb.ranks)}}}};
  emit(cfg, doc, "outputs\n" + render::output_table(outputs) + describe_preferences(pa, pb), out);
  return kExitOk;
}

inline int cmd_equiv_check(const RunConfig& cfg, std::ostream& out) {
  const EquivalenceSummary s = run_equivalence_suite(cfg.dim, cfg.trials, cfg.seed, cfg.tol.tie);
  Json doc{{"format", "dqg-equiv-check v1"}, {"seed", cfg.seed},         {"dim", cfg.dim},
           {"trials", s.trials},           {"failures", s.failures}, {"trials_with_ties", s.trials_with_ties}};
  std::string table = "seed: " + std::to_string(cfg.seed) + "\n";
  table += "distance-to-phi ranking vs strictly-competitive payoff ranking, dim " + std::to_string(cfg.dim) + "\n";
  table += "trials: " + std::to_string(s.trials) + "  with ties: " + std::to_string(s.trials_with_ties) +
           "  failures: " + std::to_string(s.failures) + "\n";
  table += s.failures == 0 ? "PASS\n" : "FAIL\n";
  emit(cfg, doc, table, out);
  return s.failures == 0 ? kExitOk : kExitValidation;
}

inline int cmd_order_check(const RunConfig& cfg, std::ostream& out) {
  std::string raw;
  const io::GameFile f = load_game_file(cfg, raw);
  const auto rep = order_sensitivity(f.game, cfg.tol.unitary);
  Json pairs = Json::array();
  for (std::size_t i = 0; i < rep.commuting_pairs.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rep.commuting_pairs.cols(); ++j) row.push_back(rep.commuting_pairs(i, j) != 0);
    pairs.push_back(std::move(row));
  }
  Json doc{{"format", "dqg-order-check v1"},
           {"commuting_pairs", pairs},
           {"outputs_match", rep.outputs_match},
           {"max_commutator_norm", rep.max_commutator_norm}};
  std::string table = "commuting [alpha_i, beta_j] = 0\n";
  for (std::size_t i = 0; i < rep.commuting_pairs.rows(); ++i) {
    table += "  [";
    for (std::size_t j = 0; j < rep.commuting_pairs.cols(); ++j)
      table += std::string(j ? ", " : "") + (rep.commuting_pairs(i, j) ? "yes" : "no");
    table += "]\n";
  }
  table += "max commutator norm: " + render::fixed4(rep.max_commutator_norm) + "\n";
  table += std::string("outputs match under both play orders: ") + (rep.outputs_match ? "yes" : "no") + "\n";
  emit(cfg, doc, table, out);
  return kExitOk;
}

inline int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  catalog::CatalogOptions opts;
  opts.gamma = cfg.gamma;
  opts.alpha_seed = cfg.alpha_seed;
  const catalog::CatalogEntry entry = catalog::make_entry(cfg.catalog_name, opts);
  const io::GameFile file{entry.game, entry.pref_a, entry.pref_b};
  const std::string text = io::dump(io::to_json(file));
  if (cfg.emit_path) io::write_file(*cfg.emit_path, text);
  std::string header = "catalog " + entry.name + "\n";
  if (entry.expected) {
    header += "expected equilibrium " + render::profile(entry.expected->profile) + " " +
              render::state(entry.expected->state) + "\n";
  }
  if (cfg.catalog_solve) {
    return solve_and_emit(cfg, entry.game, entry.pref_a, entry.pref_b, "sha256:" + io::sha256_hex(text), header, out);
  }
  const OutputTable outputs = build_outputs(entry.game);
  const Preference pa = make_preference(outputs, entry.pref_a, Player::A, cfg.tol.tie);
  const Preference pb = make_preference(outputs, entry.pref_b, Player::B, cfg.tol.tie);
  if (cfg.format == EmitFormat::Machine) out << text;
  else out << header << "outputs\n" << render::output_table(outputs) << describe_preferences(pa, pb);
  if (cfg.out_path) io::write_file(*cfg.out_path, text);
  return kExitOk;
}

inline int cmd_reverse(const RunConfig& cfg, std::ostream& out) {
  std::string raw;
  const io::GameFile f = load_game_file(cfg, raw);
  const Json cj = io::load_document(cfg.candidates);
  if (!cj.is_array()) throw ParseError("--candidates: expected an array of {\"pi_a\", \"pi_b\"} objects");
  std::vector<std::pair<StateVector, StateVector>> cands;
  for (const auto& c : cj) {
    cands.emplace_back(io::state_from_json(io::detail::field(c, "pi_a", "candidate"), "pi_a", cfg.tol),
                       io::state_from_json(io::detail::field(c, "pi_b", "candidate"), "pi_b", cfg.tol));
  }
  if (cands.empty()) throw ValidationError("reverse: candidate list is empty");
  const auto accepted = reverse_engineer_distance(f.game, cfg.target, cands, cfg.tol.tie);
  Json acc = Json::array();
  std::string table = "target " + render::profile(cfg.target) + ", " + std::to_string(cands.size()) + " candidates\n";
  for (const auto& [pa, pb] : accepted) {
    std::size_t index = 0;
    while (!(cands[index].first == pa && cands[index].second == pb)) ++index;
    acc.push_back(Json{{"index", index}, {"pi_a", io::to_json(pa)}, {"pi_b", io::to_json(pb)}});
    table += "  accepted #" + std::to_string(index) + ": pi_A = " + render::state(pa) + "; pi_B = " +
             render::state(pb) + "\n";
  }
  table += "accepted: " + std::to_string(accepted.size()) + "\n";
  Json doc{{"format", "dqg-reverse v1"},
           {"target", Json::array({cfg.target.row, cfg.target.col})},
           {"candidates", cands.size()},
           {"accepted", std::move(acc)}};
  emit(cfg, doc, table, out);
  return kExitOk;
}

inline int cmd_count_games(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m == 0 || cfg.n == 0) throw ValidationError("count-games: m and n must be positive");
  const std::string count = count_games(cfg.m, cfg.n).str();
  Json doc{{"format", "dqg-count v1"},
           {"m", cfg.m},
           {"n", cfg.n},
           {"count", count},
           {"interpretation", kGameCountInterpretation}};
  emit(cfg, doc,
       "games for m = " + std::to_string(cfg.m) + ", n = " + std::to_string(cfg.n) + ": " + count + "\n" +
           "interpretation: " + kGameCountInterpretation + "\n",
       out);
  return kExitOk;
}

}  // namespace detail

/// Runs one command. Returns 0 on success, 1 when an invariant is violated,
/// 2 when a file or document cannot be read.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Solve: return detail::cmd_solve(cfg, out);
      case Command::Induce: return detail::cmd_induce(cfg, out);
      case Command::EquivCheck: return detail::cmd_equiv_check(cfg, out);
      case Command::OrderCheck: return detail::cmd_order_check(cfg, out);
      case Command::Catalog: return detail::cmd_catalog(cfg, out);
      case Command::Reverse: return detail::cmd_reverse(cfg, out);
      case Command::CountGames: return detail::cmd_count_games(cfg, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace dqg::cli
