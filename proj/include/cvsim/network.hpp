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

#ifndef CVSIM_NETWORK_HPP
#define CVSIM_NETWORK_HPP

// Declarative optical networks: a mode count, an ordered gate list applied
// to the N-mode vacuum, and a list of analyses evaluated on the final state.

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvsim/entanglement.hpp"
#include "cvsim/gates.hpp"
#include "cvsim/phase_space.hpp"
#include "cvsim/symplectic.hpp"

namespace cvsim {

struct Displace {
  double alpha_mag = 0.0;
  double alpha_phase = 0.0;
};
struct Squeeze {
  double r = 0.0;
  double theta = 0.0;
};
struct Rotate {
  double phi = 0.0;
};
struct BeamSplitter {
  double theta = 0.0;
  double phi = 0.0;
};
struct PrepareThermal {
  double n_bar = 0.0;
};

using GateParams = std::variant<Displace, Squeeze, Rotate, BeamSplitter, PrepareThermal>;

struct GateDescriptor {
  GateParams params;
  std::vector<std::size_t> modes;
};

/// Kind name as used in network files: displace, squeeze, rotate,
/// beamsplitter, prepare_thermal.
std::string gate_kind(const GateParams& params);

struct ReducedRequest {
  std::vector<std::size_t> modes;
};
struct SimonRequest {
  std::vector<std::size_t> modes;  // exactly two
};
struct LogNegativityRequest {
  std::vector<std::size_t> part_a;
  std::vector<std::size_t> part_b;
};
struct WignerRequest {
  std::size_t mode = 0;
  PhaseSpaceGrid grid;
};

using AnalysisRequest =
    std::variant<ReducedRequest, SimonRequest, LogNegativityRequest, WignerRequest>;

struct NetworkSpec {
  std::size_t num_modes = 1;
  double hbar = kDefaultHbar;
  std::vector<GateDescriptor> gates;
  std::vector<AnalysisRequest> analyses;
};

/// Checks mode indices, parameter domains and analysis requests. Messages
/// name the offending gate or analysis by index.
void validate(const NetworkSpec& spec);

template <typename Scalar>
struct ReducedResult {
  std::vector<std::size_t> modes;
  GaussianState<Scalar> state;
};
template <typename Scalar>
struct SimonResult {
  std::vector<std::size_t> modes;
  SimonReport<Scalar> report;
};
template <typename Scalar>
struct LogNegativityResult {
  Bipartition bipartition;
  Scalar value;
  Vector<Scalar> nu_tilde;
};
template <typename Scalar>
struct WignerResult {
  std::size_t mode;
  WignerField<Scalar> field;
};

template <typename Scalar>
using AnalysisResult = std::variant<ReducedResult<Scalar>, SimonResult<Scalar>,
                                    LogNegativityResult<Scalar>, WignerResult<Scalar>>;

template <typename Scalar>
struct NetworkResult {
  GaussianState<Scalar> state;
  std::vector<AnalysisResult<Scalar>> analyses;
};

template <typename Scalar>
GaussianState<Scalar> apply_gate(const GateDescriptor& gate, const GaussianState<Scalar>& state) {
  const std::size_t n = state.num_modes();
  const Scalar hbar = state.hbar();
  return std::visit(
      [&](const auto& p) -> GaussianState<Scalar> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Displace>) {
          return apply(displacement_gate<Scalar>(Scalar(p.alpha_mag), Scalar(p.alpha_phase),
                                                 gate.modes.at(0), n, hbar),
                       state);
        } else if constexpr (std::is_same_v<T, Squeeze>) {
          return apply(squeeze_gate<Scalar>(Scalar(p.r), Scalar(p.theta), gate.modes.at(0), n),
                       state);
        } else if constexpr (std::is_same_v<T, Rotate>) {
          return apply(rotation_gate<Scalar>(Scalar(p.phi), gate.modes.at(0), n), state);
        } else if constexpr (std::is_same_v<T, BeamSplitter>) {
          return apply(beamsplitter_gate<Scalar>(Scalar(p.theta), Scalar(p.phi), gate.modes.at(0),
                                                 gate.modes.at(1), n),
                       state);
        } else {
          return thermal_prepare<Scalar>(Scalar(p.n_bar), gate.modes.at(0), state);
        }
      },
      gate.params);
}

template <typename Scalar>
AnalysisResult<Scalar> run_analysis(const AnalysisRequest& request,
                                    const GaussianState<Scalar>& state) {
  return std::visit(
      [&](const auto& req) -> AnalysisResult<Scalar> {
        using T = std::decay_t<decltype(req)>;
        if constexpr (std::is_same_v<T, ReducedRequest>) {
          return ReducedResult<Scalar>{req.modes, reduced_state(state, req.modes)};
        } else if constexpr (std::is_same_v<T, SimonRequest>) {
          return SimonResult<Scalar>{req.modes, simon_criterion(reduced_state(state, req.modes))};
        } else if constexpr (std::is_same_v<T, LogNegativityRequest>) {
          // Reduce to A u B, then renumber so the bipartition refers to the
          // reduced state's modes.
          std::vector<std::size_t> modes = req.part_a;
          modes.insert(modes.end(), req.part_b.begin(), req.part_b.end());
          const auto reduced = reduced_state(state, modes);
          Bipartition local;
          for (std::size_t k = 0; k < req.part_a.size(); ++k) local.part_a.push_back(k);
          for (std::size_t k = 0; k < req.part_b.size(); ++k) {
            local.part_b.push_back(req.part_a.size() + k);
          }
          return LogNegativityResult<Scalar>{Bipartition{req.part_a, req.part_b},
                                             log_negativity(reduced, local),
                                             partial_transpose_spectrum(reduced, local)};
        } else {
          return WignerResult<Scalar>{req.mode, wigner_gaussian(state, req.grid, req.mode)};
        }
      },
      request);
}

/// Runs the gates in order on the N-mode vacuum, then every analysis.
template <typename Scalar = double>
NetworkResult<Scalar> run_network(const NetworkSpec& spec) {
  validate(spec);
  auto state = vacuum_state<Scalar>(spec.num_modes, Scalar(spec.hbar));
  for (const auto& gate : spec.gates) state = apply_gate(gate, state);
  NetworkResult<Scalar> result{state, {}};
  for (std::size_t i = 0; i < spec.analyses.size(); ++i) {
    try {
      result.analyses.push_back(run_analysis(spec.analyses[i], state));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("analysis " + std::to_string(i) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace cvsim

#endif  // CVSIM_NETWORK_HPP
