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

#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <set>

#include "cvsim/errors.hpp"
#include "cvsim/network.hpp"

namespace cvsim {

std::string gate_kind(const GateParams& params) {
  static constexpr const char* kNames[] = {"displace", "squeeze", "rotate", "beamsplitter",
                                           "prepare_thermal"};
  return kNames[params.index()];
}

namespace {

void check_modes(const std::vector<std::size_t>& modes, std::size_t expected, std::size_t n,
                 const std::string& where) {
  if (expected != 0 && modes.size() != expected) {
    throw InvalidArgument(
        fmt::format("{}: expected {} mode(s), got {}", where, expected, modes.size()));
  }
  if (modes.empty()) throw InvalidArgument(where + ": mode list is empty");
  std::set<std::size_t> seen;
  for (std::size_t m : modes) {
    if (m >= n) throw InvalidArgument(fmt::format("{}: mode {} out of range for {} modes", where, m, n));
    if (!seen.insert(m).second) throw InvalidArgument(fmt::format("{}: mode {} repeated", where, m));
  }
}

void check_finite(double v, const std::string& where, const char* name) {
  if (!std::isfinite(v)) throw InvalidArgument(fmt::format("{}: {} must be finite", where, name));
}

}  // namespace

void validate(const NetworkSpec& spec) {
  if (spec.num_modes == 0) throw InvalidArgument("network: modes must be at least 1");
  if (!(spec.hbar > 0.0) || !std::isfinite(spec.hbar)) {
    throw InvalidArgument("network: hbar must be positive and finite");
  }
  const std::size_t n = spec.num_modes;
  for (std::size_t g = 0; g < spec.gates.size(); ++g) {
    const auto& gate = spec.gates[g];
    const std::string where = fmt::format("gate {} ({})", g, gate_kind(gate.params));
    const bool two_mode = std::holds_alternative<BeamSplitter>(gate.params);
    check_modes(gate.modes, two_mode ? 2 : 1, n, where);
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Displace>) {
            check_finite(p.alpha_mag, where, "alpha_mag");
            check_finite(p.alpha_phase, where, "alpha_phase");
            if (p.alpha_mag < 0.0) throw InvalidArgument(where + ": alpha_mag must be >= 0");
          } else if constexpr (std::is_same_v<T, Squeeze>) {
            check_finite(p.r, where, "r");
            check_finite(p.theta, where, "theta");
            if (p.r < 0.0) throw InvalidArgument(where + ": r must be >= 0");
          } else if constexpr (std::is_same_v<T, Rotate>) {
            check_finite(p.phi, where, "phi");
          } else if constexpr (std::is_same_v<T, BeamSplitter>) {
            check_finite(p.theta, where, "theta");
            check_finite(p.phi, where, "phi");
            if (p.theta < 0.0 || p.theta > std::numbers::pi / 2) {
              throw InvalidArgument(where + ": theta must lie in [0, pi/2]");
            }
          } else {
            check_finite(p.n_bar, where, "n_bar");
            if (p.n_bar < 0.0) throw InvalidArgument(where + ": n_bar must be >= 0");
          }
        },
        gate.params);
  }
  for (std::size_t a = 0; a < spec.analyses.size(); ++a) {
    const std::string where = fmt::format("analysis {}", a);
    std::visit(
        [&](const auto& req) {
          using T = std::decay_t<decltype(req)>;
          if constexpr (std::is_same_v<T, ReducedRequest>) {
            check_modes(req.modes, 0, n, where);
          } else if constexpr (std::is_same_v<T, SimonRequest>) {
            check_modes(req.modes, 2, n, where);
          } else if constexpr (std::is_same_v<T, LogNegativityRequest>) {
            if (req.part_a.empty() || req.part_b.empty()) {
              throw InvalidArgument(where + ": part_a and part_b must be non-empty");
            }
            std::vector<std::size_t> all = req.part_a;
            all.insert(all.end(), req.part_b.begin(), req.part_b.end());
            check_modes(all, 0, n, where);
          } else {
            if (req.mode >= n) throw InvalidArgument(where + ": mode out of range");
            try {
              req.grid.validate();
            } catch (const InvalidArgument& e) {
              throw InvalidArgument(where + ": " + e.what());
            }
          }
        },
        spec.analyses[a]);
  }
}

}  // namespace cvsim
