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

#ifndef CVSIM_PHASE_SPACE_HPP
#define CVSIM_PHASE_SPACE_HPP

// Phase-space functions of Gaussian states: characteristic function,
// Wigner function on a grid and the s-ordered quasiprobability family.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "cvsim/entanglement.hpp"
#include "cvsim/symplectic.hpp"

namespace cvsim {

struct PhaseSpaceGrid {
  double x_min = -5.0;
  double x_max = 5.0;
  double p_min = -5.0;
  double p_max = 5.0;
  std::size_t nx = 100;
  std::size_t np = 100;

  void validate() const {
    if (!(x_min < x_max) || !(p_min < p_max)) {
      throw InvalidArgument("phase-space grid needs x_min < x_max and p_min < p_max");
    }
    if (nx < 2 || np < 2) throw InvalidArgument("phase-space grid needs nx, np >= 2");
  }
  double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
  double dp() const { return (p_max - p_min) / static_cast<double>(np - 1); }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
  double p(std::size_t j) const { return p_min + static_cast<double>(j) * dp(); }
};

template <typename Scalar>
struct WignerField {
  PhaseSpaceGrid grid;
  Matrix<Scalar> values;  // values(i, j) = W(x_i, p_j)

  /// Riemann sum of the values times the cell area.
  Scalar normalization() const {
    return values.sum() * Scalar(grid.dx()) * Scalar(grid.dp());
  }
};

namespace detail {

// Multivariate normal density; throws DegenerateInput unless cov is
// positive definite.
template <typename Scalar>
class GaussianDensity {
 public:
  GaussianDensity(Vector<Scalar> mean, const Matrix<Scalar>& cov)
      : mean_(std::move(mean)), llt_(cov) {
    if (llt_.info() != Eigen::Success) {
      throw DegenerateInput("covariance matrix is not positive definite");
    }
    const Matrix<Scalar> l = llt_.matrixL();
    Scalar log_det(0);
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
      if (!(l(i, i) > Scalar(0))) throw DegenerateInput("covariance matrix is singular");
      log_det += Scalar(2) * std::log(l(i, i));
    }
    const auto d = static_cast<Scalar>(mean_.size());
    log_norm_ = -Scalar(0.5) * (d * std::log(Scalar(2) * std::numbers::pi_v<Scalar>) + log_det);
  }

  Scalar operator()(const Vector<Scalar>& r) const {
    const Vector<Scalar> diff = r - mean_;
    const Vector<Scalar> w = llt_.matrixL().solve(diff);
    return std::exp(log_norm_ - Scalar(0.5) * w.squaredNorm());
  }

 private:
  Vector<Scalar> mean_;
  Eigen::LLT<Matrix<Scalar>> llt_;
  Scalar log_norm_;
};

}  // namespace detail

/// W(r) = exp(-(r - rbar)^T sigma^{-1} (r - rbar) / 2) / sqrt((2 pi)^{2N} det sigma)
/// evaluated at a point of the full 2N-dimensional phase space.
template <typename Scalar>
Scalar wigner_gaussian_at(const GaussianState<Scalar>& state, const Vector<Scalar>& r) {
  const auto interleaved = to_interleaved(state);
  if (r.size() != interleaved.mean().size()) {
    throw InvalidArgument("wigner_gaussian_at: point has the wrong dimension");
  }
  return detail::GaussianDensity<Scalar>(interleaved.mean(), interleaved.cov())(r);
}

/// Single-mode Wigner function of `mode` on a grid. Rows are evaluated
/// independently, so the loop may be parallelized without changing output.
template <typename Scalar>
WignerField<Scalar> wigner_gaussian(const GaussianState<Scalar>& state,
                                    const PhaseSpaceGrid& grid, std::size_t mode = 0) {
  grid.validate();
  const auto reduced = reduced_state(to_interleaved(state), {mode});
  const detail::GaussianDensity<Scalar> density(reduced.mean(), reduced.cov());
  WignerField<Scalar> field{grid, Matrix<Scalar>(static_cast<Eigen::Index>(grid.nx),
                                                 static_cast<Eigen::Index>(grid.np))};
  Vector<Scalar> r(2);
  for (std::size_t i = 0; i < grid.nx; ++i) {
    for (std::size_t j = 0; j < grid.np; ++j) {
      r << Scalar(grid.x(i)), Scalar(grid.p(j));
      field.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = density(r);
    }
  }
  return field;
}

/// chi(r) = exp(-r^T Omega^T sigma Omega r / 2) exp(i rbar^T Omega r).
/// Its Fourier transform (2 pi)^{-2N} int dr e^{-i r0^T Omega r} chi(r)
/// is the Wigner function above, evaluated at r0.
template <typename Scalar>
std::complex<Scalar> characteristic_gaussian(const GaussianState<Scalar>& state,
                                             const Vector<Scalar>& r) {
  const auto interleaved = to_interleaved(state);
  if (r.size() != interleaved.mean().size()) {
    throw InvalidArgument("characteristic_gaussian: argument has the wrong dimension");
  }
  const Matrix<Scalar> omega = symplectic_form<Scalar>(interleaved.num_modes());
  const Vector<Scalar> w = omega * r;
  const Scalar quad = w.dot(interleaved.cov() * w);
  const Scalar phase = interleaved.mean().dot(w);
  return std::exp(std::complex<Scalar>(-quad / Scalar(2), phase));
}

/// s-ordered quasiprobability P(alpha, s) of one mode as a density in d^2 alpha.
///
/// For Gaussian states it is the normal density with covariance
/// sigma - s (hbar/2) I at (x, p) = sqrt(2 hbar) (Re alpha, Im alpha), times
/// the Jacobian 2 hbar. s = -1 is the Husimi Q function and s = 0 the Wigner
/// function. Beyond the largest s for which the shifted covariance stays
/// positive definite the distribution is singular and no value is returned.
template <typename Scalar>
Scalar s_quasiprob_gaussian(const GaussianState<Scalar>& state, std::complex<Scalar> alpha,
                            Scalar s, std::size_t mode = 0) {
  const auto reduced = reduced_state(to_interleaved(state), {mode});
  const Scalar hbar = reduced.hbar();
  const Matrix<Scalar> shifted =
      reduced.cov() - Matrix<Scalar>::Identity(2, 2) * (s * hbar / Scalar(2));
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> eig(shifted, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= Scalar(1e-12) * std::max(Scalar(1), hbar)) {
    throw UnsupportedOrdering("s-ordered quasiprobability is singular for this state at s = " +
                              std::to_string(static_cast<double>(s)));
  }
  const Scalar scale = std::sqrt(Scalar(2) * hbar);
  Vector<Scalar> r(2);
  r << scale * alpha.real(), scale * alpha.imag();
  return Scalar(2) * hbar * detail::GaussianDensity<Scalar>(reduced.mean(), shifted)(r);
}

}  // namespace cvsim

#endif  // CVSIM_PHASE_SPACE_HPP
