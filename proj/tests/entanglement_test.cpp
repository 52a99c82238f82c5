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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "cvsim/entanglement.hpp"
#include "cvsim/errors.hpp"
#include "cvsim/gates.hpp"
#include "test_util.hpp"

namespace cvsim {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::numbers::pi;
using testing::MatrixNear;

// The squeezed pair mixed on a 50:50 splitter.
GaussianStated tmsv(double r, double hbar = 2.0) {
  auto s = vacuum_state<double>(2, hbar);
  s = apply(squeeze_gate(r, 0.0, 0, 2), s);
  s = apply(squeeze_gate(r, pi, 1, 2), s);
  return apply(beamsplitter_gate(pi / 4, 0.0, 0, 1, 2), s);
}

GaussianStated three_bs_network() {
  auto s = vacuum_state<double>(4);
  s = apply(squeeze_gate(0.5, 0.0, 0, 4), s);
  s = apply(squeeze_gate(0.5, pi, 1, 4), s);
  s = apply(beamsplitter_gate(pi / 4, 0.0, 0, 1, 4), s);
  s = apply(beamsplitter_gate(pi / 4, 0.0, 0, 2, 4), s);
  s = apply(beamsplitter_gate(pi / 4, 0.0, 1, 3, 4), s);
  return s;
}

// Oracle: E_N from a general complex eigensolve of i Omega sigma~.
double oracle_log_negativity(const MatrixXd& cov, const std::vector<std::size_t>& part_b,
                             double hbar) {
  MatrixXd t = MatrixXd::Identity(cov.rows(), cov.rows());
  for (auto m : part_b) t(2 * m + 1, 2 * m + 1) = -1;
  const MatrixXd pt = t * cov * t;
  const Eigen::MatrixXcd m = std::complex<double>(0, 1) *
                             (symplectic_form<double>(cov.rows() / 2) * pt).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  std::vector<double> mod;
  for (Eigen::Index i = 0; i < m.rows(); ++i) mod.push_back(std::abs(solver.eigenvalues()(i)));
  std::sort(mod.begin(), mod.end());
  double e = 0;
  for (std::size_t k = 0; k < mod.size(); k += 2) e += std::max(0.0, -std::log2(mod[k] / (hbar / 2)));
  return e;
}

TEST(ReducedState, TmsvModesAreThermal) {
  const auto s = tmsv(0.5);
  for (std::size_t m : {0u, 1u}) {
    const auto r = reduced_state(s, {m});
    EXPECT_TRUE(MatrixNear(r.mean(), VectorXd::Zero(2), 1e-12));
    EXPECT_TRUE(MatrixNear(r.cov(), 1.54308063 * MatrixXd::Identity(2, 2), 1e-8));
  }
}

TEST(ReducedState, ProductStateMarginalAndOrder) {
  auto s = apply(displacement_gate(1.6, 0.0, 1, 2), vacuum_state<double>(2));
  s = apply(squeeze_gate(0.2, 0.0, 1, 2), s);
  const auto r = reduced_state(s, {1});
  const auto single = apply(squeeze_gate(0.2, 0.0, 0, 1),
                            apply(displacement_gate(1.6, 0.0, 0, 1), vacuum_state<double>(1)));
  EXPECT_TRUE(MatrixNear(r.mean(), single.mean(), 1e-14));
  EXPECT_TRUE(MatrixNear(r.cov(), single.cov(), 1e-14));
  const auto net = three_bs_network();
  const auto swapped = reduced_state(net, {3, 0});
  EXPECT_EQ(swapped.cov()(0, 0), net.cov()(6, 6));
  EXPECT_EQ(swapped.cov()(2, 0), net.cov()(0, 6));
}

TEST(ReducedState, NetworkTrace) {
  EXPECT_NEAR(reduced_state(three_bs_network(), {0}).cov().trace(), 2 * 1.27154, 1e-5);
}

TEST(ReducedState, Rejects) {
  const auto s = vacuum_state<double>(3);
  EXPECT_THROW(reduced_state(s, {}), InvalidArgument);
  EXPECT_THROW(reduced_state(s, {3}), InvalidArgument);
  EXPECT_THROW(reduced_state(s, {1, 1}), InvalidArgument);
}

TEST(PartialTranspose, Structure) {
  std::mt19937_64 gen(1);
  const MatrixXd c = testing::random_symmetric(gen, 4);
  EXPECT_TRUE((partial_transpose_cov(c, {}).array() == c.array()).all());
  const MatrixXd pt = partial_transpose_cov(c, {1});
  // sigma_AB -> sigma_AB sigma_z, sigma_B -> sigma_z sigma_B sigma_z.
  Eigen::Matrix2d z;
  z << 1, 0, 0, -1;
  EXPECT_TRUE(MatrixNear(pt.block(0, 2, 2, 2), MatrixXd(c.block(0, 2, 2, 2) * z), 0.0));
  EXPECT_TRUE(MatrixNear(pt.block(2, 2, 2, 2), MatrixXd(z * c.block(2, 2, 2, 2) * z), 0.0));
  EXPECT_TRUE(MatrixNear(pt.block(0, 0, 2, 2), MatrixXd(c.block(0, 0, 2, 2)), 0.0));
  EXPECT_TRUE((partial_transpose_cov(pt, {1}).array() == c.array()).all());
  EXPECT_EQ(max_asymmetry(pt), 0.0);
  EXPECT_THROW(partial_transpose_cov(c, {2}), InvalidArgument);
}

TEST(Simon, Examples) {
  const auto t = simon_criterion(tmsv(0.5));
  EXPECT_EQ(t.verdict, Verdict::entangled);
  EXPECT_NEAR(t.margin, t.lhs - t.rhs, 1e-15);
  EXPECT_EQ(simon_criterion(vacuum_state<double>(2)).verdict, Verdict::separable);
  const auto net = three_bs_network();
  EXPECT_EQ(simon_criterion(reduced_state(net, {0, 2})).verdict, Verdict::separable);
  EXPECT_EQ(simon_criterion(reduced_state(net, {1, 3})).verdict, Verdict::separable);
  EXPECT_EQ(simon_criterion(reduced_state(net, {0, 3})).verdict, Verdict::entangled);
  EXPECT_THROW(simon_criterion(vacuum_state<double>(3)), InvalidArgument);
}

TEST(Simon, TmsvClosedForm) {
  // For the TMSV, det A = det B = c^2, det C = -s^2 and the trace term is
  // 2 c^2 s^2 (hbar = 2).
  for (double r : {0.1, 0.5, 1.0}) {
    const double c = std::cosh(2 * r), s = std::sinh(2 * r);
    const auto rep = simon_criterion(tmsv(r));
    const double lhs = c * c * c * c + (1 - s * s) * (1 - s * s) - 2 * c * c * s * s;
    EXPECT_NEAR(rep.lhs, lhs, 1e-9 * std::max(1.0, std::abs(lhs)));
    EXPECT_NEAR(rep.rhs, 2 * c * c, 1e-9 * c * c);
  }
}

// The two invariant-form inequalities that combine into the criterion:
// with and without |det C|, for states on either side of the boundary.
TEST(Simon, InvariantFormCrossCheck) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    auto s = thermal_prepare(0.5 * u(gen), 0, vacuum_state<double>(2));
    s = thermal_prepare(0.5 * u(gen), 1, s);
    s = apply(squeeze_gate(u(gen), 6 * u(gen), 0, 2), s);
    s = apply(squeeze_gate(u(gen), 6 * u(gen), 1, 2), s);
    s = apply(beamsplitter_gate(1.5 * u(gen), 6 * u(gen), 0, 1, 2), s);
    s = apply(rotation_gate(6 * u(gen), 1, 2), s);
    const Eigen::Matrix2d a = s.cov().block(0, 0, 2, 2), b = s.cov().block(2, 2, 2, 2),
                          c = s.cov().block(0, 2, 2, 2);
    Eigen::Matrix2d j;
    j << 0, 1, -1, 0;
    const double tr = (a * j * c * j * b * j * c.transpose() * j).trace();
    const double base = a.determinant() * b.determinant() - tr + 1.0 - (a.determinant() + b.determinant());
    // Uncertainty form with the signed determinant holds for every state.
    const double physical = base + c.determinant() * c.determinant() - 2 * c.determinant();
    EXPECT_GE(physical, -1e-9);
    // The partial transpose flips the sign of det C; |det C| picks the
    // tighter of the two forms.
    const double ppt = base + c.determinant() * c.determinant() + 2 * c.determinant();
    const auto rep = simon_criterion(s);
    EXPECT_NEAR(rep.margin, std::min(physical, ppt), 1e-9);
    EXPECT_EQ(rep.verdict == Verdict::separable, std::min(physical, ppt) >= -1e-10);
    // PPT is necessary and sufficient for two modes.
    const double en = log_negativity(s, Bipartition{{0}, {1}});
    EXPECT_EQ(rep.verdict == Verdict::entangled, en > 1e-10) << "margin " << rep.margin << " E_N " << en;
  }
}

TEST(LogNegativity, Golden) {
  EXPECT_NEAR(log_negativity(tmsv(0.5), Bipartition{{0}, {1}}), 1.4426950408889623, 1e-9);
  const auto net = three_bs_network();
  EXPECT_NEAR(log_negativity(reduced_state(net, {0, 3}), Bipartition{{0}, {1}}),
              0.5480589169169516, 1e-9);
  EXPECT_EQ(log_negativity(reduced_state(net, {0, 2}), Bipartition{{0}, {1}}), 0.0);
  EXPECT_EQ(log_negativity(reduced_state(net, {1, 3}), Bipartition{{0}, {1}}), 0.0);
}

TEST(LogNegativity, TmsvIdentityAndOracle) {
  for (double hbar : {1.0, 2.0}) {
    for (double r : {0.1, 0.5, 1.0, 1.7}) {
      const auto s = tmsv(r, hbar);
      const double en = log_negativity(s, Bipartition{{0}, {1}});
      EXPECT_NEAR(en, 2 * r / std::log(2.0), 1e-9);
      EXPECT_NEAR(en, oracle_log_negativity(s.cov(), {1}, hbar), 1e-9);
      const VectorXd nu = partial_transpose_spectrum(s, Bipartition{{0}, {1}});
      EXPECT_NEAR(nu(0), std::exp(-2 * r), 1e-9);
      EXPECT_NEAR(nu(1), std::exp(2 * r), 1e-9 * std::exp(2 * r));
    }
  }
}

TEST(LogNegativity, MultiModeBipartitionsAgreeWithOracle) {
  const auto net = three_bs_network();
  for (const auto& bp : {Bipartition{{0}, {1, 2, 3}}, Bipartition{{0, 1}, {2, 3}},
                         Bipartition{{0, 2}, {1, 3}}, Bipartition{{3}, {0, 1, 2}}}) {
    EXPECT_NEAR(log_negativity(net, bp), oracle_log_negativity(net.cov(), bp.part_b, 2.0), 1e-9);
  }
}

TEST(LogNegativity, ProductStatesAreZero) {
  auto s = apply(squeeze_gate(0.8, 0.3, 0, 3), vacuum_state<double>(3));
  s = apply(squeeze_gate(0.4, 1.3, 2, 3), s);
  s = apply(beamsplitter_gate(0.7, 0.2, 1, 2, 3), s);
  EXPECT_EQ(log_negativity(s, Bipartition{{0}, {1, 2}}), 0.0);
}

TEST(LogNegativity, LocalRotationInvariance) {
  const auto net = three_bs_network();
  const Bipartition bp{{0}, {1, 2, 3}};
  const double base = log_negativity(net, bp);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 6.3);
  for (std::size_t m = 0; m < 4; ++m) {
    EXPECT_NEAR(log_negativity(apply(rotation_gate(u(gen), m, 4), net), bp), base, 1e-9);
  }
}

TEST(LogNegativity, RejectsUnphysicalAndBadBipartitions) {
  const GaussianStated bad(VectorXd::Zero(4), 0.5 * MatrixXd::Identity(4, 4));
  EXPECT_THROW(log_negativity(bad, Bipartition{{0}, {1}}), InvalidArgument);
  const auto s = tmsv(0.5);
  EXPECT_THROW(log_negativity(s, Bipartition{{0}, {0}}), InvalidArgument);
  EXPECT_THROW(log_negativity(s, Bipartition{{0}, {}}), InvalidArgument);
  EXPECT_THROW(log_negativity(s, Bipartition{{0}, {2}}), InvalidArgument);
  const auto bp = Bipartition::complement_of({2, 0}, 4);
  EXPECT_EQ(bp.part_a, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(bp.part_b, (std::vector<std::size_t>{1, 3}));
}

}  // namespace
}  // namespace cvsim
