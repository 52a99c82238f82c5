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

#ifndef CVSIM_ENTANGLEMENT_HPP
#define CVSIM_ENTANGLEMENT_HPP

// Reduced states, covariance-level partial transposition, the Simon
// separability test and the logarithmic negativity of Gaussian states.
// All routines expect interleaved ordering.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "cvsim/symplectic.hpp"

namespace cvsim {

inline constexpr double kSimonTol = 1e-10;
inline constexpr double kLogNegativityTol = 1e-10;

enum class Verdict { separable, entangled };

inline const char* to_string(Verdict v) {
  return v == Verdict::separable ? "separable" : "entangled";
}

/// Split of a state's modes into two disjoint, sorted groups.
struct Bipartition {
  std::vector<std::size_t> part_a;
  std::vector<std::size_t> part_b;

  /// Part B is the complement of part_a in {0, ..., num_modes - 1}.
  static Bipartition complement_of(std::vector<std::size_t> part_a, std::size_t num_modes) {
    std::sort(part_a.begin(), part_a.end());
    Bipartition bp{part_a, {}};
    for (std::size_t m = 0; m < num_modes; ++m) {
      if (!std::binary_search(part_a.begin(), part_a.end(), m)) bp.part_b.push_back(m);
    }
    return bp;
  }

  void validate(std::size_t num_modes) const {
    std::set<std::size_t> seen;
    for (const auto* part : {&part_a, &part_b}) {
      for (std::size_t m : *part) {
        if (m >= num_modes) {
          throw InvalidArgument("bipartition mode " + std::to_string(m) + " out of range");
        }
        if (!seen.insert(m).second) {
          throw InvalidArgument("bipartition mode " + std::to_string(m) + " repeated");
        }
      }
    }
    if (seen.size() != num_modes) {
      throw InvalidArgument("bipartition does not cover every mode of the state");
    }
  }
};

template <typename Scalar>
struct SimonReport {
  Scalar lhs;
  Scalar rhs;
  Scalar margin;  // lhs - rhs
  Verdict verdict;
};

namespace detail {

inline void check_interleaved(Ordering o, const char* what) {
  if (o != Ordering::interleaved) {
    throw MalformedInput(std::string(what) + " expects interleaved ordering");
  }
}

}  // namespace detail

/// Marginal on the selected modes, keeping their order as given.
template <typename Scalar>
GaussianState<Scalar> reduced_state(const GaussianState<Scalar>& state,
                                    const std::vector<std::size_t>& modes) {
  detail::check_interleaved(state.ordering(), "reduced_state");
  if (modes.empty()) throw InvalidArgument("reduced_state: empty mode selection");
  std::set<std::size_t> seen;
  std::vector<Eigen::Index> rows;
  for (std::size_t m : modes) {
    if (m >= state.num_modes()) {
      throw InvalidArgument("reduced_state: mode " + std::to_string(m) + " out of range");
    }
    if (!seen.insert(m).second) {
      throw InvalidArgument("reduced_state: mode " + std::to_string(m) + " repeated");
    }
    rows.push_back(static_cast<Eigen::Index>(2 * m));
    rows.push_back(static_cast<Eigen::Index>(2 * m + 1));
  }
  Vector<Scalar> mean = state.mean()(rows);
  Matrix<Scalar> cov = state.cov()(rows, rows);
  return GaussianState<Scalar>(std::move(mean), std::move(cov), state.hbar());
}

/// T sigma T with T = diag(1, 1, ..., 1, -1 on p of every mode in part_b).
template <typename Derived>
typename Derived::PlainObject partial_transpose_cov(
    const Eigen::MatrixBase<Derived>& cov, const std::vector<std::size_t>& part_b) {
  using Scalar = typename Derived::Scalar;
  if (cov.rows() != cov.cols() || cov.rows() % 2 != 0) {
    throw InvalidArgument("partial_transpose_cov: covariance must be 2N x 2N");
  }
  const auto n = static_cast<std::size_t>(cov.rows() / 2);
  Vector<Scalar> signs = Vector<Scalar>::Ones(cov.rows());
  std::set<std::size_t> seen;
  for (std::size_t m : part_b) {
    if (m >= n) {
      throw InvalidArgument("partial_transpose_cov: mode " + std::to_string(m) +
                            " out of range");
    }
    if (!seen.insert(m).second) {
      throw InvalidArgument("partial_transpose_cov: mode " + std::to_string(m) + " repeated");
    }
    signs(static_cast<Eigen::Index>(2 * m + 1)) = Scalar(-1);
  }
  return signs.asDiagonal() * cov * signs.asDiagonal();
}

/// Simon criterion for a two-mode state with J = [[0, 1], [-1, 0]]:
///   lhs = det A det B + (hbar^2/4 - |det C|)^2 - tr(A J C J B J C^T J)
///   rhs = hbar^2/4 (det A + det B)
/// Separable iff lhs >= rhs - tol.
template <typename Scalar>
SimonReport<Scalar> simon_criterion(const GaussianState<Scalar>& state,
                                    double tol = kSimonTol) {
  detail::check_interleaved(state.ordering(), "simon_criterion");
  if (state.num_modes() != 2) {
    throw InvalidArgument("simon_criterion needs exactly two modes, got " +
                          std::to_string(state.num_modes()));
  }
  using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
  const Mat2 a = state.cov().template block<2, 2>(0, 0);
  const Mat2 c = state.cov().template block<2, 2>(0, 2);
  const Mat2 b = state.cov().template block<2, 2>(2, 2);
  Mat2 j;
  j << Scalar(0), Scalar(1), Scalar(-1), Scalar(0);

  const Scalar q = state.hbar() * state.hbar() / Scalar(4);
  const Scalar det_a = a.determinant();
  const Scalar det_b = b.determinant();
  const Scalar det_c = c.determinant();
  const Scalar tr = (a * j * c * j * b * j * c.transpose() * j).trace();
  const Scalar lhs = det_a * det_b + (q - std::abs(det_c)) * (q - std::abs(det_c)) - tr;
  const Scalar rhs = q * (det_a + det_b);
  const Scalar margin = lhs - rhs;
  return {lhs, rhs, margin, margin >= -Scalar(tol) ? Verdict::separable : Verdict::entangled};
}

/// Symplectic eigenvalues of the partially transposed covariance, in units
/// of hbar/2 (so vacuum gives 1).
template <typename Scalar>
Vector<Scalar> partial_transpose_spectrum(const GaussianState<Scalar>& state,
                                          const Bipartition& bipartition) {
  detail::check_interleaved(state.ordering(), "partial_transpose_spectrum");
  bipartition.validate(state.num_modes());
  const Matrix<Scalar> pt = partial_transpose_cov(state.cov(), bipartition.part_b);
  return symplectic_eigenvalues(pt) / (state.hbar() / Scalar(2));
}

/// E_N = sum_j max(0, -log2 nu~_j). Terms below tol are dropped so that
/// rounding noise on exactly separable states does not register.
template <typename Scalar>
Scalar log_negativity(const GaussianState<Scalar>& state, const Bipartition& bipartition,
                      double tol = kLogNegativityTol) {
  if (!check_physicality(state).physical) {
    throw InvalidArgument("log_negativity: state violates the uncertainty relation");
  }
  const Vector<Scalar> nu = partial_transpose_spectrum(state, bipartition);
  Scalar total(0);
  for (Eigen::Index k = 0; k < nu.size(); ++k) {
    const Scalar term = -std::log2(nu(k));
    if (term > Scalar(tol)) total += term;
  }
  return total;
}

}  // namespace cvsim

#endif  // CVSIM_ENTANGLEMENT_HPP
