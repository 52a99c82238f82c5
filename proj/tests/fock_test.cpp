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

#include <cmath>
#include <numbers>
#include <random>

#include "cvsim/errors.hpp"
#include "cvsim/fock.hpp"

namespace cvsim {
namespace {

using C = std::complex<double>;
using std::numbers::pi;
const double kInvSqrt2 = 1 / std::numbers::sqrt2;

// Independent oracle: expand (a1^dag)^n1 (a2^dag)^n2 / sqrt(n1! n2!) |0> by
// polynomial multiplication under a1^dag -> T b1^dag - R e^{-i phi} b2^dag,
// a2^dag -> R e^{i phi} b1^dag + T b2^dag.
std::vector<C> brute_force(int n1, int n2, double T, double R, double phi) {
  const int n = n1 + n2;
  // poly[k] = coefficient of (b1^dag)^k (b2^dag)^{n_done - k}.
  std::vector<C> poly{1.0};
  const auto multiply = [&](C c1, C c2) {
    std::vector<C> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k] * c1;  // one more b1^dag
      next[k] += poly[k] * c2;      // one more b2^dag
    }
    poly = next;
  };
  const C e = std::polar(1.0, phi);
  for (int i = 0; i < n1; ++i) multiply(T, -R / e);
  for (int i = 0; i < n2; ++i) multiply(R * e, T);
  std::vector<C> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    out[k] = poly[k] * std::sqrt(std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0) /
                                 (std::tgamma(n1 + 1.0) * std::tgamma(n2 + 1.0)));
  }
  return out;
}

// |<a|b>| = 1 with a = e^{i g} b for some global phase g.
double phase_fitted_distance(const TwoModeFockState& s, const std::vector<C>& want) {
  C overlap = 0.0;
  for (int k = 0; k <= s.total_photons; ++k) overlap += std::conj(want[k]) * s.amplitude(k, s.total_photons - k);
  const C g = overlap / std::abs(overlap);
  double d = 0;
  for (int k = 0; k <= s.total_photons; ++k) {
    d = std::max(d, std::abs(s.amplitude(k, s.total_photons - k) - g * want[k]));
  }
  return d;
}

TEST(BsOutput, SinglePhotonWorkedExample) {
  const auto s = bs_output(1, 0, kInvSqrt2, kInvSqrt2, pi);
  EXPECT_EQ(s.total_photons, 1);
  EXPECT_NEAR(std::abs(s.amplitude(0, 1) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(1, 0) - kInvSqrt2), 0.0, 1e-15);
}

TEST(BsOutput, HongOuMandel) {
  const auto s = bs_output(1, 1, kInvSqrt2, kInvSqrt2, pi);
  EXPECT_LT(std::abs(s.amplitude(1, 1)), 1e-12);
  EXPECT_EQ(s.amplitudes.count({1, 1}), 0u);
  // (|2,0> - |0,2>)/sqrt(2) up to a global phase.
  EXPECT_LT(phase_fitted_distance(s, {-kInvSqrt2, 0.0, kInvSqrt2}), 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(2, 0) + s.amplitude(0, 2)), 0.0, 1e-12);
}

TEST(BsOutput, SingleInputClosedForm) {
  const double t = 0.6, r = 0.8, phi = 0.9;
  for (int n : {1, 4, 9}) {
    const auto s = bs_output(n, 0, t, r, phi);
    for (int k = 0; k <= n; ++k) {
      const double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
      const C want = std::sqrt(binom) * std::pow(t, k) * std::pow(-r * std::polar(1.0, -phi), n - k);
      EXPECT_NEAR(std::abs(s.amplitude(k, n - k) - want), 0.0, 1e-13);
    }
  }
}

TEST(BsOutput, MatchesBruteForceExpansion) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n1 = static_cast<int>(gen() % 7), n2 = static_cast<int>(gen() % 7);
    const double th = 2 * pi * u(gen), phi = 2 * pi * u(gen);
    const auto s = bs_output(n1, n2, std::cos(th), std::sin(th), phi);
    const auto want = brute_force(n1, n2, std::cos(th), std::sin(th), phi);
    for (int k = 0; k <= n1 + n2; ++k) {
      EXPECT_NEAR(std::abs(s.amplitude(k, n1 + n2 - k) - want[k]), 0.0, 1e-12) << n1 << "," << n2;
    }
  }
}

TEST(BsOutput, NormalizationAndConservation) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n1 = 0; n1 <= 20; ++n1) {
    for (int n2 = 0; n1 + n2 <= 20; ++n2) {
      const double th = 2 * pi * u(gen), phi = 2 * pi * u(gen);
      const auto s = bs_output(n1, n2, std::cos(th), std::sin(th), phi);
      EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
      for (const auto& [key, c] : s.amplitudes) EXPECT_EQ(key.first + key.second, n1 + n2);
    }
  }
}

TEST(BsOutput, ReachesPhotonCap) {
  const auto s = bs_output(20, 20, std::cos(0.3), std::sin(0.3), 1.0);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_THROW(bs_output(21, 20, 1.0, 0.0, 0.0), InvalidArgument);
}

TEST(BsOutput, BalancedEqualInputsHaveNoOddOddKets) {
  for (int n = 1; n <= 8; ++n) {
    for (double phi : {0.0, 0.7, pi}) {
      const auto s = bs_output(n, n, kInvSqrt2, kInvSqrt2, phi);
      for (int k = 1; k <= 2 * n; k += 2) EXPECT_LT(std::abs(s.amplitude(k, 2 * n - k)), 1e-12);
      // Brute-force cross-check of the same cancellation.
      const auto want = brute_force(n, n, kInvSqrt2, kInvSqrt2, phi);
      for (int k = 1; k <= 2 * n; k += 2) EXPECT_LT(std::abs(want[k]), 1e-12);
    }
  }
}

TEST(BsOutput, IdentityTransmission) {
  const auto s = bs_output(3, 5, 1.0, 0.0, 0.4);
  ASSERT_EQ(s.amplitudes.size(), 1u);
  EXPECT_EQ(s.amplitude(3, 5), C(1.0, 0.0));
}

TEST(BsOutput, RejectsNonUnitary) {
  EXPECT_THROW(bs_output(1, 0, 0.7, 0.7, 0.0), InvalidArgument);
  EXPECT_THROW(bs_output(-1, 0, 1.0, 0.0, 0.0), InvalidArgument);
}

TEST(PhotonNumberDistribution, Examples) {
  const auto one = bs_output(1, 0, kInvSqrt2, kInvSqrt2, pi);
  const auto p = photon_number_distribution(one, 0);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  const auto hom = bs_output(1, 1, kInvSqrt2, kInvSqrt2, pi);
  for (int mode : {0, 1}) {
    const auto q = photon_number_distribution(hom, mode);
    ASSERT_EQ(q.size(), 3u);
    EXPECT_NEAR(q[0], 0.5, 1e-12);
    EXPECT_NEAR(q[1], 0.0, 1e-12);
    EXPECT_NEAR(q[2], 0.5, 1e-12);
  }
  const auto vac = photon_number_distribution(bs_output(0, 0, kInvSqrt2, kInvSqrt2, 0.0), 1);
  EXPECT_EQ(vac, std::vector<double>{1.0});
  EXPECT_THROW(photon_number_distribution(one, 2), InvalidArgument);
}

}  // namespace
}  // namespace cvsim
