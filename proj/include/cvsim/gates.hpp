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

#ifndef CVSIM_GATES_HPP
#define CVSIM_GATES_HPP

// Symplectic gate builders. Each builder returns the full 2N x 2N embedding
// in interleaved ordering together with a displacement vector; apply() maps
// (mean, cov) -> (S mean + d, S cov S^T).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "cvsim/symplectic.hpp"

namespace cvsim {

template <typename Scalar>
struct SymplecticGate {
  Matrix<Scalar> matrix;
  Vector<Scalar> displacement;

  std::size_t num_modes() const { return static_cast<std::size_t>(matrix.rows() / 2); }
};

namespace detail {

inline void check_mode(std::size_t mode, std::size_t num_modes, const char* what) {
  if (mode >= num_modes) {
    throw InvalidArgument(std::string(what) + ": mode " + std::to_string(mode) +
                          " out of range for " + std::to_string(num_modes) + " modes");
  }
}

template <typename Scalar>
SymplecticGate<Scalar> identity_gate(std::size_t num_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * num_modes);
  return {Matrix<Scalar>::Identity(dim, dim), Vector<Scalar>::Zero(dim)};
}

}  // namespace detail

/// D(alpha) with alpha = alpha_mag * e^{i alpha_phase}. Shifts the target
/// mode's (x, p) by sqrt(2 hbar) (Re alpha, Im alpha).
template <typename Scalar>
SymplecticGate<Scalar> displacement_gate(Scalar alpha_mag, Scalar alpha_phase,
                                         std::size_t mode, std::size_t num_modes,
                                         Scalar hbar = Scalar(kDefaultHbar)) {
  detail::check_mode(mode, num_modes, "displacement_gate");
  if (alpha_mag < Scalar(0)) throw InvalidArgument("displacement_gate: |alpha| < 0");
  auto gate = detail::identity_gate<Scalar>(num_modes);
  const Scalar scale = std::sqrt(Scalar(2) * hbar) * alpha_mag;
  const auto m = static_cast<Eigen::Index>(mode);
  gate.displacement(2 * m) = scale * std::cos(alpha_phase);
  gate.displacement(2 * m + 1) = scale * std::sin(alpha_phase);
  return gate;
}

/// S(r e^{i theta}):
///   x -> (cosh r - cos(theta) sinh r) x - sin(theta) sinh(r) p
///   p -> (cosh r + cos(theta) sinh r) p - sin(theta) sinh(r) x
template <typename Scalar>
SymplecticGate<Scalar> squeeze_gate(Scalar r, Scalar theta, std::size_t mode,
                                    std::size_t num_modes) {
  detail::check_mode(mode, num_modes, "squeeze_gate");
  if (r < Scalar(0)) {
    throw InvalidArgument("squeeze_gate: r must be >= 0 (fold the sign into theta)");
  }
  auto gate = detail::identity_gate<Scalar>(num_modes);
  const Scalar ch = std::cosh(r), sh = std::sinh(r);
  const Scalar c = std::cos(theta), s = std::sin(theta);
  const auto m = static_cast<Eigen::Index>(mode);
  gate.matrix(2 * m, 2 * m) = ch - c * sh;
  gate.matrix(2 * m, 2 * m + 1) = -s * sh;
  gate.matrix(2 * m + 1, 2 * m) = -s * sh;
  gate.matrix(2 * m + 1, 2 * m + 1) = ch + c * sh;
  return gate;
}

/// Phase rotation a -> a e^{i phi}.
template <typename Scalar>
SymplecticGate<Scalar> rotation_gate(Scalar phi, std::size_t mode, std::size_t num_modes) {
  detail::check_mode(mode, num_modes, "rotation_gate");
  auto gate = detail::identity_gate<Scalar>(num_modes);
  const Scalar c = std::cos(phi), s = std::sin(phi);
  const auto m = static_cast<Eigen::Index>(mode);
  gate.matrix(2 * m, 2 * m) = c;
  gate.matrix(2 * m, 2 * m + 1) = -s;
  gate.matrix(2 * m + 1, 2 * m) = s;
  gate.matrix(2 * m + 1, 2 * m + 1) = c;
  return gate;
}

/// Beam splitter on modes (i, j):
///   a_i -> cos(theta) a_i - e^{-i phi} sin(theta) a_j
///   a_j -> e^{i phi} sin(theta) a_i + cos(theta) a_j
template <typename Scalar>
SymplecticGate<Scalar> beamsplitter_gate(Scalar theta, Scalar phi, std::size_t i,
                                         std::size_t j, std::size_t num_modes) {
  detail::check_mode(i, num_modes, "beamsplitter_gate");
  detail::check_mode(j, num_modes, "beamsplitter_gate");
  if (i == j) throw InvalidArgument("beamsplitter_gate: modes must differ");
  auto gate = detail::identity_gate<Scalar>(num_modes);
  const Scalar ct = std::cos(theta), st = std::sin(theta);
  const Scalar cp = std::cos(phi), sp = std::sin(phi);
  const auto xi = static_cast<Eigen::Index>(2 * i), pi = xi + 1;
  const auto xj = static_cast<Eigen::Index>(2 * j), pj = xj + 1;
  auto& s = gate.matrix;
  s(xi, xi) = ct;
  s(pi, pi) = ct;
  s(xj, xj) = ct;
  s(pj, pj) = ct;
  s(xi, xj) = -cp * st;
  s(xi, pj) = -sp * st;
  s(pi, xj) = sp * st;
  s(pi, pj) = -cp * st;
  s(xj, xi) = cp * st;
  s(xj, pi) = -sp * st;
  s(pj, xi) = sp * st;
  s(pj, pi) = cp * st;
  return gate;
}

template <typename Scalar>
GaussianState<Scalar> apply(const SymplecticGate<Scalar>& gate,
                            const GaussianState<Scalar>& state) {
  if (state.ordering() != Ordering::interleaved) {
    throw MalformedInput("gates act on interleaved states; call to_interleaved first");
  }
  if (gate.matrix.rows() != state.cov().rows()) {
    throw InvalidArgument("gate and state have different mode counts");
  }
  Vector<Scalar> mean = gate.matrix * state.mean() + gate.displacement;
  Matrix<Scalar> cov = gate.matrix * state.cov() * gate.matrix.transpose();
  cov = (cov + cov.transpose()).eval() / Scalar(2);
  return GaussianState<Scalar>(std::move(mean), std::move(cov), state.hbar(),
                               state.ordering());
}

/// Replaces a vacuum mode by a thermal state with mean photon number n_bar.
/// This is a state preparation, not a gate; the target must be vacuum.
template <typename Scalar>
GaussianState<Scalar> thermal_prepare(Scalar n_bar, std::size_t mode,
                                      const GaussianState<Scalar>& state) {
  detail::check_mode(mode, state.num_modes(), "thermal_prepare");
  if (n_bar < Scalar(0)) throw InvalidArgument("thermal_prepare: n_bar < 0");
  if (state.ordering() != Ordering::interleaved) {
    throw MalformedInput("thermal_prepare expects an interleaved state");
  }
  const auto m = static_cast<Eigen::Index>(2 * mode);
  const Scalar half_hbar = state.hbar() / Scalar(2);
  const auto dim = state.cov().rows();
  const Scalar tol(kPhysicalityTol);

  Matrix<Scalar> cov = state.cov();
  bool vacuum = std::abs(state.mean()(m)) < tol && std::abs(state.mean()(m + 1)) < tol;
  for (Eigen::Index a = m; a < m + 2; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const Scalar expected = (a == b) ? half_hbar : Scalar(0);
      if (std::abs(cov(a, b) - expected) > tol) vacuum = false;
    }
  }
  if (!vacuum) throw InvalidArgument("thermal_prepare: target mode is not in vacuum");

  cov.block(m, m, 2, 2) =
      Matrix<Scalar>::Identity(2, 2) * ((Scalar(2) * n_bar + Scalar(1)) * half_hbar);
  return GaussianState<Scalar>(state.mean(), std::move(cov), state.hbar(), state.ordering());
}

}  // namespace cvsim

#endif  // CVSIM_GATES_HPP
