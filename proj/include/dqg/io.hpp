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
 * JSON file formats.
 *
 * Complex numbers are [re, im]; states are arrays of complex numbers;
 * matrices are row-major arrays of rows. Two document kinds carry a
 * "format" tag: "dqg-game v1" (game plus optional preference block) and
 * "dqg-result v1" (equilibria, rank and cardinal grids, provenance).
 * Documents are written with a fixed key order and shortest round-trip
 * number formatting, so load followed by dump reproduces the bytes.
 */

#pragma once

#include <array>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "dqg/equilibrium.hpp"
#include "dqg/errors.hpp"
#include "dqg/game.hpp"
#include "dqg/preferences.hpp"
#include "dqg/quantum_core.hpp"
#include "dqg/tolerances.hpp"

namespace dqg::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGameFormat = "dqg-game v1";
inline constexpr const char* kResultFormat = "dqg-result v1";

// --- primitives -------------------------------------------------------------

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const StateVector& s) {
  Json out = Json::array();
  for (const auto& z : s.amps()) out.push_back(to_json(z));
  return out;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const HermitianObservable& h) {
  Json basis = Json::array();
  for (const auto& e : h.basis()) basis.push_back(to_json(e));
  return Json{{"basis", std::move(basis)}, {"eigenvalues", h.eigenvalues()}};
}

template <class T>
Json grid_to_json(const Grid<T>& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

inline double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

}  // namespace detail

inline Complex complex_from_json(const Json& j, const std::string& where = "complex") {
  if (!j.is_array() || j.size() != 2) detail::fail(where, "complex numbers are [re, im] pairs");
  return {detail::number(j[0], where), detail::number(j[1], where)};
}

inline std::vector<Complex> amplitudes_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) detail::fail(where, "expected a non-empty array of [re, im] pairs");
  std::vector<Complex> amps;
  amps.reserve(j.size());
  for (const auto& z : j) amps.push_back(complex_from_json(z, where));
  return amps;
}

inline StateVector state_from_json(const Json& j, const std::string& where = "state",
                                   const Tolerances& tol = {}) {
  return StateVector(amplitudes_from_json(j, where), tol.norm);
}

inline Matrix matrix_from_json(const Json& j, const std::string& where = "matrix") {
  if (!j.is_array() || j.empty()) detail::fail(where, "expected a non-empty array of rows");
  const std::size_t d = j.size();
  std::vector<Complex> data;
  data.reserve(d * d);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != d) detail::fail(where, "matrix must be square");
    for (const auto& z : row) data.push_back(complex_from_json(z, where));
  }
  return Matrix(d, std::move(data));
}

inline UnitaryOp unitary_from_json(const Json& j, const std::string& where, const Tolerances& tol = {}) {
  try {
    return UnitaryOp(matrix_from_json(j, where), tol.unitary);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

inline HermitianObservable observable_from_json(const Json& j, const std::string& where = "observable",
                                                const Tolerances& tol = {}) {
  const Json& basis_json = detail::field(j, "basis", where);
  if (!basis_json.is_array() || basis_json.empty()) detail::fail(where, "basis must be a non-empty array");
  std::vector<StateVector> basis;
  for (const auto& e : basis_json) basis.push_back(state_from_json(e, where + ".basis", tol));
  std::vector<double> eig;
  if (auto it = j.find("eigenvalues"); it != j.end()) {
    if (!it->is_array()) detail::fail(where, "eigenvalues must be an array");
    for (const auto& v : *it) eig.push_back(detail::number(v, where + ".eigenvalues"));
  } else {
    for (std::size_t k = 0; k < basis.size(); ++k) eig.push_back(static_cast<double>(k));
  }
  return HermitianObservable(std::move(basis), std::move(eig), tol.norm);
}

// --- preference specs -------------------------------------------------------

inline Json to_json(const PreferenceSpec& spec) {
  Json out{{"variant", variant_tag(spec)}};
  std::visit(dqg::detail::Overloaded{
                 [&](const MeasurementSpec& s) {
                   out["observable"] = to_json(s.observable);
                   out["weights"] = s.weights;
                 },
                 [&](const DistanceGlobalSpec& s) { out["gamma"] = to_json(s.gamma); },
                 [&](const DistanceLocalSpec& s) { out["gamma"] = to_json(s.gamma); },
                 [&](const VarianceSpec& s) { out["observable"] = to_json(s.observable); },
                 [&](const InfoSpec& s) { out["observable"] = to_json(s.observable); },
                 [&](const OrderingSpec& s) {
                   Json states = Json::array();
                   for (const auto& st : s.states) states.push_back(to_json(st));
                   out["states"] = std::move(states);
                 },
             },
             spec);
  return out;
}

inline PreferenceSpec spec_from_json(const Json& j, const std::string& where = "preference",
                                     const Tolerances& tol = {}) {
  const Json& tag_json = detail::field(j, "variant", where);
  if (!tag_json.is_string()) detail::fail(where, "variant must be a string");
  const std::string tag = tag_json.get<std::string>();
  if (tag == "measurement") {
    std::vector<double> weights;
    const Json& w = detail::field(j, "weights", where);
    if (!w.is_array()) detail::fail(where, "weights must be an array");
    for (const auto& v : w) weights.push_back(detail::number(v, where + ".weights"));
    return MeasurementSpec{observable_from_json(detail::field(j, "observable", where), where + ".observable", tol),
                           std::move(weights)};
  }
  if (tag == "distance_global")
    return DistanceGlobalSpec{state_from_json(detail::field(j, "gamma", where), where + ".gamma", tol)};
  if (tag == "distance_local")
    return DistanceLocalSpec{state_from_json(detail::field(j, "gamma", where), where + ".gamma", tol)};
  if (tag == "variance")
    return VarianceSpec{observable_from_json(detail::field(j, "observable", where), where + ".observable", tol)};
  if (tag == "info")
    return InfoSpec{observable_from_json(detail::field(j, "observable", where), where + ".observable", tol)};
  if (tag == "ordering") {
    const Json& states = detail::field(j, "states", where);
    if (!states.is_array()) detail::fail(where, "states must be an array");
    OrderingSpec s;
    for (const auto& st : states) s.states.push_back(state_from_json(st, where + ".states", tol));
    return s;
  }
  detail::fail(where, "unknown variant '" + tag + "'");
}

// --- game files -------------------------------------------------------------

struct GameFile {
  GameDefinition game;
  std::optional<PreferenceSpec> pref_a;
  std::optional<PreferenceSpec> pref_b;
};

inline Json to_json(const GameFile& f) {
  Json ops_a = Json::array(), ops_b = Json::array();
  for (const auto& op : f.game.ops_a) ops_a.push_back(to_json(op.matrix()));
  for (const auto& op : f.game.ops_b) ops_b.push_back(to_json(op.matrix()));
  Json out{{"format", kGameFormat},
           {"dim", f.game.dim()},
           {"input_state", to_json(f.game.input_state)},
           {"ops_a", std::move(ops_a)},
           {"ops_b", std::move(ops_b)},
           {"play_order", to_string(f.game.play_order)}};
  if (f.pref_a || f.pref_b) {
    Json prefs = Json::object();
    if (f.pref_a) prefs["A"] = to_json(*f.pref_a);
    if (f.pref_b) prefs["B"] = to_json(*f.pref_b);
    out["preferences"] = std::move(prefs);
  }
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline GameFile game_from_json(const Json& j, const Tolerances& tol = {}) {
  const std::string where = "game";
  const Json& format = detail::field(j, "format", where);
  if (!format.is_string() || format.get<std::string>() != kGameFormat) {
    detail::fail(where, std::string("format must be \"") + kGameFormat + "\"");
  }
  const Json& dim_json = detail::field(j, "dim", where);
  if (!dim_json.is_number_integer() || dim_json.get<long long>() <= 0) {
    detail::fail(where, "dim must be a positive integer");
  }
  const std::size_t dim = dim_json.get<std::size_t>();

  GameFile f{GameDefinition{state_from_json(detail::field(j, "input_state", where), "input_state", tol), {}, {},
                            PlayOrder::B_FIRST},
             std::nullopt, std::nullopt};
  for (const char* key : {"ops_a", "ops_b"}) {
    const Json& ops = detail::field(j, key, where);
    if (!ops.is_array()) detail::fail(where, std::string(key) + " must be an array");
    auto& dest = std::string_view(key) == "ops_a" ? f.game.ops_a : f.game.ops_b;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      dest.push_back(unitary_from_json(ops[k], std::string(key) + "[" + std::to_string(k) + "]", tol));
    }
  }
  if (auto it = j.find("play_order"); it != j.end()) {
    const std::string order = it->is_string() ? it->get<std::string>() : "";
    if (order == "B_FIRST") f.game.play_order = PlayOrder::B_FIRST;
    else if (order == "A_FIRST") f.game.play_order = PlayOrder::A_FIRST;
    else detail::fail(where, "play_order must be \"B_FIRST\" or \"A_FIRST\"");
  }
  if (f.game.dim() != dim) throw DimensionMismatch("game input_state vs dim", f.game.dim(), dim);
  f.game.validate();
  if (auto it = j.find("preferences"); it != j.end()) {
    if (auto a = it->find("A"); a != it->end()) f.pref_a = spec_from_json(*a, "preferences.A", tol);
    if (auto b = it->find("B"); b != it->end()) f.pref_b = spec_from_json(*b, "preferences.B", tol);
  }
  return f;
}

// --- results ----------------------------------------------------------------

/// In-memory form of a "dqg-result v1" document.
struct ResultDocument {
  EquilibriumResult equilibrium;
  Grid<int> ranks_a;
  Grid<int> ranks_b;
  std::optional<Grid<double>> cardinal_a;
  std::optional<Grid<double>> cardinal_b;
  std::string game_digest;
  PreferenceSpec pref_a;
  PreferenceSpec pref_b;
};

inline Json to_json(const ResultDocument& r) {
  Json eq = Json::array(), states = Json::array();
  for (const auto& p : r.equilibrium.equilibria) eq.push_back(Json::array({p.row, p.col}));
  for (const auto& s : r.equilibrium.states) states.push_back(to_json(s));
  Json payoffs = nullptr;
  if (r.equilibrium.payoffs) {
    payoffs = Json::array();
    for (const auto& [a, b] : *r.equilibrium.payoffs) payoffs.push_back(Json::array({a, b}));
  }
  return Json{{"format", kResultFormat},
              {"exists", r.equilibrium.exists()},
              {"equilibria", std::move(eq)},
              {"states", std::move(states)},
              {"payoffs", std::move(payoffs)},
              {"ranks", Json{{"A", grid_to_json(r.ranks_a)}, {"B", grid_to_json(r.ranks_b)}}},
              {"cardinal",
               Json{{"A", r.cardinal_a ? grid_to_json(*r.cardinal_a) : Json(nullptr)},
                    {"B", r.cardinal_b ? grid_to_json(*r.cardinal_b) : Json(nullptr)}}},
              {"provenance",
               Json{{"game_digest", r.game_digest}, {"pref_a", to_json(r.pref_a)}, {"pref_b", to_json(r.pref_b)}}}};
}

template <class T>
Grid<T> grid_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) detail::fail(where, "expected a non-empty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  std::vector<T> flat;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols || cols == 0) detail::fail(where, "ragged grid");
    for (const auto& v : row) {
      if (!v.is_number()) detail::fail(where, "grid entries must be numbers");
      flat.push_back(v.get<T>());
    }
  }
  return Grid<T>(j.size(), cols, std::move(flat));
}

inline ResultDocument result_from_json(const Json& j, const Tolerances& tol = {}) {
  const std::string where = "result";
  const Json& format = detail::field(j, "format", where);
  if (!format.is_string() || format.get<std::string>() != kResultFormat) {
    detail::fail(where, std::string("format must be \"") + kResultFormat + "\"");
  }
  const Json& ranks = detail::field(j, "ranks", where);
  const Json& cardinal = detail::field(j, "cardinal", where);
  const Json& prov = detail::field(j, "provenance", where);
  ResultDocument r{EquilibriumResult{},
                   grid_from_json<int>(detail::field(ranks, "A", "ranks"), "ranks.A"),
                   grid_from_json<int>(detail::field(ranks, "B", "ranks"), "ranks.B"),
                   std::nullopt,
                   std::nullopt,
                   detail::field(prov, "game_digest", "provenance").get<std::string>(),
                   spec_from_json(detail::field(prov, "pref_a", "provenance"), "provenance.pref_a", tol),
                   spec_from_json(detail::field(prov, "pref_b", "provenance"), "provenance.pref_b", tol)};
  validate_ranks(r.ranks_a);
  validate_ranks(r.ranks_b);
  if (const Json& a = detail::field(cardinal, "A", "cardinal"); !a.is_null())
    r.cardinal_a = grid_from_json<double>(a, "cardinal.A");
  if (const Json& b = detail::field(cardinal, "B", "cardinal"); !b.is_null())
    r.cardinal_b = grid_from_json<double>(b, "cardinal.B");
  for (const auto& p : detail::field(j, "equilibria", where)) {
    if (!p.is_array() || p.size() != 2) detail::fail(where, "equilibria are [i, j] pairs");
    r.equilibrium.equilibria.push_back(Profile{p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  for (const auto& s : detail::field(j, "states", where))
    r.equilibrium.states.push_back(state_from_json(s, "states", tol));
  if (const Json& pay = detail::field(j, "payoffs", where); !pay.is_null()) {
    r.equilibrium.payoffs.emplace();
    for (const auto& p : pay) {
      if (!p.is_array() || p.size() != 2) detail::fail(where, "payoffs are [a, b] pairs");
      r.equilibrium.payoffs->emplace_back(detail::number(p[0], where), detail::number(p[1], where));
    }
  }
  if (r.equilibrium.states.size() != r.equilibrium.equilibria.size()) {
    detail::fail(where, "states and equilibria differ in length");
  }
  if (detail::field(j, "exists", where).get<bool>() != r.equilibrium.exists()) {
    throw ValidationError("result: 'exists' disagrees with the equilibrium list");
  }
  return r;
}

// --- misc ---------------------------------------------------------------------

inline std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int{md[k]};
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

/// A path or, when the argument starts with '{' or '[', an inline document.
inline Json load_document(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    return parse(path_or_inline, "inline document");
  }
  return parse(read_file(path_or_inline), path_or_inline);
}

}  // namespace dqg::io
