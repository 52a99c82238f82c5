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

#ifndef CVSIM_SYMPLECTIC_HPP
#define CVSIM_SYMPLECTIC_HPP

// Gaussian-state representation and the symplectic algebra underneath it.
//
// A Gaussian state of N bosonic modes is fixed by the mean of the 2N
// quadratures r = (x_1, p_1, ..., x_N, p_N) and the symmetrized covariance
// sigma_kl = <{dr_k, dr_l}>/2. The vacuum has sigma = (hbar/2) I, so with the
// default hbar = 2 it is the identity. Everything in this header is templated
// on the scalar type; double and long double are exercised by the tests.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cvsim/errors.hpp"

namespace cvsim {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class Ordering { interleaved, xp_block };

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kPhysicalityTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-10;
inline constexpr double kPairingTol = 1e-8;
inline constexpr double kDisplayThreshold = 1e-11;
inline constexpr double kDefaultHbar = 2.0;

inline const char* to_string(Ordering o) {
  return o == Ordering::interleaved ? "interleaved" : "xp_block";
}

/// Largest |A - A^T| entry.
template <typename Derived>
typename Derived::Scalar max_asymmetry(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Derived::Scalar(0);
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// Mean vector plus covariance matrix of an N-mode Gaussian state.
///
/// Construction checks shapes, hbar > 0 and covariance symmetry. It does not
/// check the uncertainty relation, so deliberately unphysical covariances can
/// be built and handed to check_physicality.
template <typename Scalar>
class GaussianState {
 public:
  GaussianState(Vector<Scalar> mean, Matrix<Scalar> cov,
                Scalar hbar = Scalar(kDefaultHbar),
                Ordering ordering = Ordering::interleaved)
      : mean_(std::move(mean)),
        cov_(std::move(cov)),
        hbar_(hbar),
        ordering_(ordering) {
    if (mean_.size() == 0 || mean_.size() % 2 != 0) {
      throw InvalidArgument("mean vector length must be a positive even number");
    }
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
      throw InvalidArgument("covariance must be 2N x 2N with N = len(mean)/2");
    }
    if (!(hbar_ > Scalar(0))) throw InvalidArgument("hbar must be positive");
    if (max_asymmetry(cov_) > Scalar(kSymmetryTol)) {
      throw MalformedInput("covariance matrix is not symmetric");
    }
  }

  std::size_t num_modes() const { return static_cast<std::size_t>(mean_.size() / 2); }
  const Vector<Scalar>& mean() const { return mean_; }
  const Matrix<Scalar>& cov() const { return cov_; }
  Scalar hbar() const { return hbar_; }
  Ordering ordering() const { return ordering_; }

 private:
  Vector<Scalar> mean_;
  Matrix<Scalar> cov_;
  Scalar hbar_;
  Ordering ordering_;
};

using GaussianStated = GaussianState<double>;

/// Symplectic form: direct sum of [[0, 1], [-1, 0]] for interleaved ordering,
/// [[0, I], [-I, 0]] for xp-block ordering.
template <typename Scalar>
Matrix<Scalar> symplectic_form(std::size_t num_modes,
                               Ordering ordering = Ordering::interleaved) {
  const auto n = static_cast<Eigen::Index>(num_modes);
  Matrix<Scalar> omega = Matrix<Scalar>::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (ordering == Ordering::interleaved) {
      omega(2 * k, 2 * k + 1) = Scalar(1);
      omega(2 * k + 1, 2 * k) = Scalar(-1);
    } else {
      omega(k, n + k) = Scalar(1);
      omega(n + k, k) = Scalar(-1);
    }
  }
  return omega;
}

/// Frobenius norm of S Omega S^T - Omega.
template <typename Derived>
typename Derived::Scalar symplectic_defect(const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw InvalidArgument("symplectic matrix must be square with even dimension");
  }
  const auto omega = symplectic_form<Scalar>(static_cast<std::size_t>(s.rows() / 2));
  return (s * omega * s.transpose() - omega).norm();
}

template <typename Derived>
bool is_symplectic(const Eigen::MatrixBase<Derived>& s, double tol = kSymplecticTol) {
  return symplectic_defect(s) < typename Derived::Scalar(tol);
}

template <typename Scalar>
GaussianState<Scalar> vacuum_state(std::size_t num_modes,
                                   Scalar hbar = Scalar(kDefaultHbar)) {
  if (num_modes == 0) throw InvalidArgument("vacuum_state needs at least one mode");
  const auto dim = static_cast<Eigen::Index>(2 * num_modes);
  return GaussianState<Scalar>(Vector<Scalar>::Zero(dim),
                               Matrix<Scalar>::Identity(dim, dim) * (hbar / Scalar(2)),
                               hbar);
}

namespace detail {

// Sends xp-block index k -> 2k and N+k -> 2k+1.
inline Eigen::PermutationMatrix<Eigen::Dynamic> xp_to_interleaved_perm(std::size_t n) {
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(static_cast<Eigen::Index>(2 * n));
  for (std::size_t k = 0; k < n; ++k) {
    perm.indices()[static_cast<Eigen::Index>(k)] = static_cast<int>(2 * k);
    perm.indices()[static_cast<Eigen::Index>(n + k)] = static_cast<int>(2 * k + 1);
  }
  return perm;
}

}  // namespace detail

/// Reorders (x_1..x_N, p_1..p_N) into (x_1, p_1, ..., x_N, p_N).
/// A state that is already interleaved is returned unchanged.
template <typename Scalar>
GaussianState<Scalar> to_interleaved(const GaussianState<Scalar>& state) {
  if (state.ordering() == Ordering::interleaved) return state;
  const auto perm = detail::xp_to_interleaved_perm(state.num_modes());
  Vector<Scalar> mean = perm * state.mean();
  Matrix<Scalar> cov = perm * state.cov() * perm.transpose();
  return GaussianState<Scalar>(std::move(mean), std::move(cov), state.hbar(),
                               Ordering::interleaved);
}

template <typename Scalar>
GaussianState<Scalar> to_xp_block(const GaussianState<Scalar>& state) {
  if (state.ordering() == Ordering::xp_block) return state;
  const auto perm = detail::xp_to_interleaved_perm(state.num_modes());
  Vector<Scalar> mean = perm.transpose() * state.mean();
  Matrix<Scalar> cov = perm.transpose() * state.cov() * perm;
  return GaussianState<Scalar>(std::move(mean), std::move(cov), state.hbar(),
                               Ordering::xp_block);
}

template <typename Scalar>
struct PhysicalityReport {
  bool physical;
  Scalar margin;  // smallest eigenvalue of sigma + i (hbar/2) Omega
};

/// Robertson-Schroedinger test on a bare covariance matrix.
template <typename Derived>
PhysicalityReport<typename Derived::Scalar> check_physicality(
    const Eigen::MatrixBase<Derived>& cov, typename Derived::Scalar hbar,
    Ordering ordering = Ordering::interleaved, double tol = kPhysicalityTol) {
  using Scalar = typename Derived::Scalar;
  using Complex = std::complex<Scalar>;
  if (cov.rows() != cov.cols() || cov.rows() == 0 || cov.rows() % 2 != 0) {
    throw InvalidArgument("covariance must be a non-empty 2N x 2N matrix");
  }
  if (max_asymmetry(cov) > Scalar(kSymmetryTol)) {
    throw MalformedInput("covariance matrix is not symmetric");
  }
  const auto n = static_cast<std::size_t>(cov.rows() / 2);
  Matrix<Complex> h = cov.template cast<Complex>();
  h += Complex(0, hbar / Scalar(2)) * symplectic_form<Scalar>(n, ordering).template cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Matrix<Complex>> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed in check_physicality");
  }
  const Scalar margin = solver.eigenvalues().minCoeff();
  return {margin >= -Scalar(tol), margin};
}

template <typename Scalar>
PhysicalityReport<Scalar> check_physicality(const GaussianState<Scalar>& state,
                                            double tol = kPhysicalityTol) {
  return check_physicality(state.cov(), state.hbar(), state.ordering(), tol);
}

/// Symplectic eigenvalues of an interleaved covariance matrix, ascending.
///
/// The spectrum of i Omega sigma is {+-nu_k}. It is computed as the spectrum
/// of the Hermitian matrix i sigma^{1/2} Omega sigma^{1/2}, which is similar
/// to it and can be handled by a self-adjoint solver. Moduli are sorted and
/// every second one kept; the two members of each pair must agree.
template <typename Derived>
Vector<typename Derived::Scalar> symplectic_eigenvalues(
    const Eigen::MatrixBase<Derived>& cov, Ordering ordering = Ordering::interleaved) {
  using Scalar = typename Derived::Scalar;
  using Complex = std::complex<Scalar>;
  if (cov.rows() != cov.cols() || cov.rows() == 0 || cov.rows() % 2 != 0) {
    throw InvalidArgument("covariance must be a non-empty 2N x 2N matrix");
  }
  if (max_asymmetry(cov) > Scalar(kSymmetryTol)) {
    throw MalformedInput("covariance matrix is not symmetric");
  }
  const auto n = static_cast<std::size_t>(cov.rows() / 2);
  const Matrix<Scalar> sym = (cov + cov.transpose()) / Scalar(2);

  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> spd(sym);
  if (spd.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  const Scalar scale = std::max(Scalar(1), spd.eigenvalues().cwiseAbs().maxCoeff());
  if (spd.eigenvalues().minCoeff() <= Scalar(1e-14) * scale) {
    throw DegenerateInput("covariance matrix is not positive definite");
  }
  const Matrix<Scalar> root = spd.operatorSqrt();
  const Matrix<Scalar> antisym = root * symplectic_form<Scalar>(n, ordering) * root;
  const Matrix<Complex> herm = Complex(0, 1) * antisym.template cast<Complex>();

  Eigen::SelfAdjointEigenSolver<Matrix<Complex>> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  std::vector<Scalar> moduli(static_cast<std::size_t>(herm.rows()));
  for (Eigen::Index i = 0; i < herm.rows(); ++i) {
    moduli[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()(i));
  }
  std::sort(moduli.begin(), moduli.end());

  Vector<Scalar> nu(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar a = moduli[2 * k];
    const Scalar b = moduli[2 * k + 1];
    if (std::abs(a - b) > Scalar(kPairingTol) * std::max(Scalar(1), b)) {
      throw NumericalError("symplectic spectrum is not paired");
    }
    nu(static_cast<Eigen::Index>(k)) = a;
  }
  return nu;
}

template <typename Scalar>
Vector<Scalar> symplectic_eigenvalues(const GaussianState<Scalar>& state) {
  return symplectic_eigenvalues(state.cov(), state.ordering());
}

/// Tr(rho^2) = (hbar/2)^N / sqrt(det sigma). Not bounded below by 1/2.
template <typename Scalar>
Scalar purity(const GaussianState<Scalar>& state) {
  const Scalar det = state.cov().determinant();
  if (!(det > Scalar(0)) || !std::isfinite(static_cast<double>(det))) {
    throw DegenerateInput("covariance matrix is singular");
  }
  const auto n = static_cast<int>(state.num_modes());
  return std::pow(state.hbar() / Scalar(2), n) / std::sqrt(det);
}

/// Zeroes entries with |value| < threshold, as used for printed matrices.
template <typename Derived>
typename Derived::PlainObject clean_small(const Eigen::MatrixBase<Derived>& m,
                                          double threshold = kDisplayThreshold) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([threshold](Scalar v) {
    return std::abs(v) < Scalar(threshold) ? Scalar(0) : v;
  });
}

}  // namespace cvsim

#endif  // CVSIM_SYMPLECTIC_HPP
