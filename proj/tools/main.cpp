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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

dqg::Profile parse_target(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw dqg::ParseError("--target expects i,j");
  try {
    const long i = std::stol(text.substr(0, comma));
    const long j = std::stol(text.substr(comma + 1));
    if (i < 1 || j < 1) throw dqg::ValidationError("--target is 1-based: i, j >= 1");
    return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
  } catch (const std::logic_error&) {
    throw dqg::ParseError("--target expects two integers i,j");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using dqg::cli::Command;
  dqg::cli::RunConfig cfg;

  CLI::App app{"dqg: preferences and equilibria of discrete quantum games"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::optional<double> tol;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "machine"}));
  app.add_option("--out", cfg.out_path, "Write the machine-readable document to this path");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--tol", tol, "Override every tolerance (otherwise DQG_TOL or 1e-9)");

  auto* solve = app.add_subcommand("solve", "Solve a game file for pure-strategy equilibria");
  solve->add_option("game", cfg.game_path, "dqg-game v1 file")->required();
  solve->add_option("--pref-a", cfg.pref_a, "Preference spec for A (path or inline JSON)");
  solve->add_option("--pref-b", cfg.pref_b, "Preference spec for B (path or inline JSON)");

  auto* induce = app.add_subcommand("induce", "Expected-payoff preferences from a measurement");
  induce->add_option("game", cfg.game_path)->required();
  induce->add_option("--measurement", cfg.measurement, "Observable {basis, eigenvalues}")->required();
  induce->add_option("--weights", cfg.weights, "Array of [w_A, w_B] per eigenstate")->required();

  auto* equiv = app.add_subcommand("equiv-check", "Randomized distance vs strictly-competitive equivalence");
  equiv->add_option("--dim", cfg.dim)->check(CLI::Range(1, 64));
  equiv->add_option("--trials", cfg.trials);

  auto* order = app.add_subcommand("order-check", "Compare both orders of play");
  order->add_option("game", cfg.game_path)->required();

  std::string target;
  auto* reverse = app.add_subcommand("reverse", "Search candidate (pi_A, pi_B) pairs realizing a target");
  reverse->add_option("game", cfg.game_path)->required();
  reverse->add_option("--target", target, "1-based profile i,j")->required();
  reverse->add_option("--candidates", cfg.candidates, "Array of {pi_a, pi_b}")->required();

  auto* cat = app.add_subcommand("catalog", "Built-in example games");
  cat->add_option("name", cfg.catalog_name)->required()->check(CLI::IsMember(dqg::catalog::catalog_names()));
  cat->add_option("--emit", cfg.emit_path, "Write the dqg-game v1 file here");
  cat->add_flag("--solve", cfg.catalog_solve, "Solve the entry");
  cat->add_option("--gamma", cfg.gamma, "Entangling strength for ewl, in [0, pi/2]");
  cat->add_option("--alpha-seed", cfg.alpha_seed, "Seed for the random alpha of crossed-flips");

  auto* count = app.add_subcommand("count-games", "Number of preference pairs ((mn)!)^2");
  count->add_option("m", cfg.m)->required();
  count->add_option("n", cfg.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dqg::cli::kExitParse;
  }

  try {
    cfg.tol = dqg::Tolerances::from_env();
    if (tol) {
      if (!(*tol > 0.0)) throw dqg::ValidationError("--tol must be positive");
      cfg.tol.norm = cfg.tol.unitary = cfg.tol.tie = *tol;
    }
    if (reverse->parsed()) cfg.target = parse_target(target);
  } catch (const dqg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dqg::cli::kExitParse;
  } catch (const dqg::ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return dqg::cli::kExitValidation;
  }
  cfg.format = format == "machine" ? dqg::cli::EmitFormat::Machine : dqg::cli::EmitFormat::Table;

  const std::map<CLI::App*, Command> commands{{solve, Command::Solve},     {induce, Command::Induce},
                                              {equiv, Command::EquivCheck}, {order, Command::OrderCheck},
                                              {cat, Command::Catalog},      {reverse, Command::Reverse},
                                              {count, Command::CountGames}};
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) cfg.command = command;
  return dqg::cli::run(cfg, std::cout, std::cerr);
}
