// Copyright 2026 The cvsim Authors
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

#include "cvsim/network_json.hpp"

#include <cstdio>
#include <fmt/format.h>
#include <set>

#include "cvsim/io.hpp"

namespace cvsim {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(ptr, "missing required field '" + key + "'");
  return *it;
}

void require_object(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw SchemaError(ptr, "expected an object");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& ptr) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!ok.count(it.key())) throw SchemaError(ptr + "/" + it.key(), "unknown field");
  }
}

double get_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw SchemaError(ptr, "expected a number");
  return v.get<double>();
}

double optional_number(const json& obj, const char* key, double fallback, const std::string& ptr) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : get_number(*it, ptr + "/" + key);
}

std::size_t get_index(const json& v, const std::string& ptr) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(ptr, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> get_index_list(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw SchemaError(ptr, "expected an array of mode indices");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(get_index(v[k], fmt::format("{}/{}", ptr, k)));
  return out;
}

GateParams parse_params(const std::string& kind, const json& params, const std::string& ptr) {
  require_object(params, ptr);
  const auto num = [&](const char* key) {
    return get_number(require(params, key, ptr), ptr + "/" + key);
  };
  if (kind == "displace") {
    reject_unknown(params, {"alpha_mag", "alpha_phase"}, ptr);
    return Displace{num("alpha_mag"), optional_number(params, "alpha_phase", 0.0, ptr)};
  }
  if (kind == "squeeze") {
    reject_unknown(params, {"r", "theta"}, ptr);
    return Squeeze{num("r"), optional_number(params, "theta", 0.0, ptr)};
  }
  if (kind == "rotate") {
    reject_unknown(params, {"phi"}, ptr);
    return Rotate{num("phi")};
  }
  if (kind == "beamsplitter") {
    reject_unknown(params, {"theta", "phi"}, ptr);
    return BeamSplitter{num("theta"), optional_number(params, "phi", 0.0, ptr)};
  }
  if (kind == "prepare_thermal") {
    reject_unknown(params, {"n_bar"}, ptr);
    return PrepareThermal{num("n_bar")};
  }
  throw SchemaError(ptr, "unreachable gate kind");
}

GateDescriptor parse_gate(const json& g, const std::string& ptr) {
  require_object(g, ptr);
  reject_unknown(g, {"kind", "modes", "params"}, ptr);
  const json& kind = require(g, "kind", ptr);
  static const std::set<std::string> kinds = {"displace", "squeeze", "rotate", "beamsplitter",
                                              "prepare_thermal"};
  if (!kind.is_string() || !kinds.count(kind.get<std::string>())) {
    throw SchemaError(ptr + "/kind",
                      "expected one of displace, squeeze, rotate, beamsplitter, prepare_thermal");
  }
  const json empty = json::object();
  auto it = g.find("params");
  GateDescriptor out{parse_params(kind.get<std::string>(), it == g.end() ? empty : *it,
                                  ptr + "/params"),
                     get_index_list(require(g, "modes", ptr), ptr + "/modes")};
  return out;
}

PhaseSpaceGrid parse_grid(const json& v, const std::string& ptr) {
  require_object(v, ptr);
  reject_unknown(v, {"x_min", "x_max", "p_min", "p_max", "nx", "np"}, ptr);
  PhaseSpaceGrid grid;
  grid.x_min = optional_number(v, "x_min", grid.x_min, ptr);
  grid.x_max = optional_number(v, "x_max", grid.x_max, ptr);
  grid.p_min = optional_number(v, "p_min", grid.p_min, ptr);
  grid.p_max = optional_number(v, "p_max", grid.p_max, ptr);
  if (v.contains("nx")) grid.nx = get_index(v["nx"], ptr + "/nx");
  if (v.contains("np")) grid.np = get_index(v["np"], ptr + "/np");
  return grid;
}

AnalysisRequest parse_analysis(const json& a, const std::string& ptr) {
  require_object(a, ptr);
  const json& type = require(a, "type", ptr);
  const std::string t = type.is_string() ? type.get<std::string>() : "";
  if (t == "reduced") {
    reject_unknown(a, {"type", "modes"}, ptr);
    return ReducedRequest{get_index_list(require(a, "modes", ptr), ptr + "/modes")};
  }
  if (t == "simon") {
    reject_unknown(a, {"type", "modes"}, ptr);
    return SimonRequest{get_index_list(require(a, "modes", ptr), ptr + "/modes")};
  }
  if (t == "log_negativity") {
    reject_unknown(a, {"type", "part_a", "part_b"}, ptr);
    return LogNegativityRequest{get_index_list(require(a, "part_a", ptr), ptr + "/part_a"),
                                get_index_list(require(a, "part_b", ptr), ptr + "/part_b")};
  }
  if (t == "wigner") {
    reject_unknown(a, {"type", "mode", "grid"}, ptr);
    WignerRequest req;
    req.mode = get_index(require(a, "mode", ptr), ptr + "/mode");
    if (a.contains("grid")) req.grid = parse_grid(a["grid"], ptr + "/grid");
    return req;
  }
  throw SchemaError(ptr + "/type", "expected one of reduced, simon, log_negativity, wigner");
}

// Maps a validation message that starts with "gate k" or "analysis k" back
// to the matching JSON pointer.
std::string pointer_for(const std::string& message) {
  unsigned index = 0;
  if (std::sscanf(message.c_str(), "gate %u", &index) == 1) return fmt::format("/gates/{}", index);
  if (std::sscanf(message.c_str(), "analysis %u", &index) == 1) {
    return fmt::format("/analyses/{}", index);
  }
  return "";
}

ojson matrix_json(const Matrix<double>& m, double threshold) {
  const Matrix<double> c = clean_small(m, threshold);
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < c.cols(); ++j) row.push_back(c(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson vector_json(const Vector<double>& v, double threshold) {
  const Vector<double> c = clean_small(v, threshold);
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < c.size(); ++i) out.push_back(c(i));
  return out;
}

ojson grid_json(const PhaseSpaceGrid& g) {
  return ojson{{"x_min", g.x_min}, {"x_max", g.x_max}, {"p_min", g.p_min},
               {"p_max", g.p_max}, {"nx", g.nx},       {"np", g.np}};
}

}  // namespace

NetworkSpec parse_network_spec(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, {"modes", "hbar", "gates", "analyses"}, "");
  NetworkSpec spec;
  spec.num_modes = get_index(require(doc, "modes", ""), "/modes");
  if (spec.num_modes == 0) throw SchemaError("/modes", "must be at least 1");
  spec.hbar = optional_number(doc, "hbar", kDefaultHbar, "");
  if (!(spec.hbar > 0.0)) throw SchemaError("/hbar", "must be positive");
  if (doc.contains("gates")) {
    const json& gates = doc["gates"];
    if (!gates.is_array()) throw SchemaError("/gates", "expected an array");
    for (std::size_t k = 0; k < gates.size(); ++k) {
      spec.gates.push_back(parse_gate(gates[k], fmt::format("/gates/{}", k)));
    }
  }
  if (doc.contains("analyses")) {
    const json& analyses = doc["analyses"];
    if (!analyses.is_array()) throw SchemaError("/analyses", "expected an array");
    for (std::size_t k = 0; k < analyses.size(); ++k) {
      spec.analyses.push_back(parse_analysis(analyses[k], fmt::format("/analyses/{}", k)));
    }
  }
  try {
    validate(spec);
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw SchemaError(pointer_for(e.what()), e.what());
  }
  return spec;
}

NetworkSpec parse_network_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_network_spec(doc);
}

NetworkSpec load_network_spec(const std::filesystem::path& path) {
  return parse_network_spec(read_text_file(path));
}

ojson to_json(const NetworkSpec& spec) {
  ojson gates = ojson::array();
  for (const auto& g : spec.gates) {
    ojson params = std::visit(
        [](const auto& p) -> ojson {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Displace>) {
            return {{"alpha_mag", p.alpha_mag}, {"alpha_phase", p.alpha_phase}};
          } else if constexpr (std::is_same_v<T, Squeeze>) {
            return {{"r", p.r}, {"theta", p.theta}};
          } else if constexpr (std::is_same_v<T, Rotate>) {
            return {{"phi", p.phi}};
          } else if constexpr (std::is_same_v<T, BeamSplitter>) {
            return {{"theta", p.theta}, {"phi", p.phi}};
          } else {
            return {{"n_bar", p.n_bar}};
          }
        },
        g.params);
    gates.push_back({{"kind", gate_kind(g.params)}, {"modes", g.modes}, {"params", params}});
  }
  ojson analyses = ojson::array();
  for (const auto& a : spec.analyses) {
    analyses.push_back(std::visit(
        [](const auto& req) -> ojson {
          using T = std::decay_t<decltype(req)>;
          if constexpr (std::is_same_v<T, ReducedRequest>) {
            return {{"type", "reduced"}, {"modes", req.modes}};
          } else if constexpr (std::is_same_v<T, SimonRequest>) {
            return {{"type", "simon"}, {"modes", req.modes}};
          } else if constexpr (std::is_same_v<T, LogNegativityRequest>) {
            return {{"type", "log_negativity"}, {"part_a", req.part_a}, {"part_b", req.part_b}};
          } else {
            return {{"type", "wigner"}, {"mode", req.mode}, {"grid", grid_json(req.grid)}};
          }
        },
        a));
  }
  return {{"modes", spec.num_modes}, {"hbar", spec.hbar}, {"gates", gates}, {"analyses", analyses}};
}

ojson to_json(const NetworkSpec& spec, const NetworkResult<double>& result,
              double display_threshold) {
  ojson analyses = ojson::array();
  for (const auto& a : result.analyses) {
    analyses.push_back(std::visit(
        [&](const auto& r) -> ojson {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ReducedResult<double>>) {
            return {{"type", "reduced"},
                    {"modes", r.modes},
                    {"mean", vector_json(r.state.mean(), display_threshold)},
                    {"cov", matrix_json(r.state.cov(), display_threshold)}};
          } else if constexpr (std::is_same_v<T, SimonResult<double>>) {
            return {{"type", "simon"},          {"modes", r.modes},
                    {"lhs", r.report.lhs},      {"rhs", r.report.rhs},
                    {"margin", r.report.margin}, {"verdict", to_string(r.report.verdict)}};
          } else if constexpr (std::is_same_v<T, LogNegativityResult<double>>) {
            ojson nu = ojson::array();
            for (Eigen::Index k = 0; k < r.nu_tilde.size(); ++k) nu.push_back(r.nu_tilde(k));
            return {{"type", "log_negativity"},
                    {"part_a", r.bipartition.part_a},
                    {"part_b", r.bipartition.part_b},
                    {"value", r.value},
                    {"nu_tilde", nu}};
          } else {
            return {{"type", "wigner"},
                    {"mode", r.mode},
                    {"grid", grid_json(r.field.grid)},
                    {"normalization", r.field.normalization()},
                    {"values", matrix_json(r.field.values, 0.0)}};
          }
        },
        a));
  }
  return {{"modes", spec.num_modes},
          {"hbar", spec.hbar},
          {"mean", vector_json(result.state.mean(), display_threshold)},
          {"cov", matrix_json(result.state.cov(), display_threshold)},
          {"analyses", analyses}};
}

}  // namespace cvsim
