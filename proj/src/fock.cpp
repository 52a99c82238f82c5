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

#include "cvsim/fock.hpp"

#include <cmath>
#include <string>

#include "cvsim/errors.hpp"

namespace cvsim {

double TwoModeFockState::norm_squared() const {
  double s = 0.0;
  for (const auto& [key, c] : amplitudes) s += std::norm(c);
  return s;
}

std::complex<double> TwoModeFockState::amplitude(int k, int m) const {
  auto it = amplitudes.find({k, m});
  return it == amplitudes.end() ? std::complex<double>{} : it->second;
}

namespace {

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Accumulates base^e into (log magnitude, sign). Returns false when the power
// is exactly zero.
bool accumulate_power(double base, int e, long double& log_mag, int& sign) {
  if (e == 0) return true;
  if (base == 0.0) return false;
  log_mag += e * std::log(std::abs(static_cast<long double>(base)));
  if (base < 0.0 && e % 2 != 0) sign = -sign;
  return true;
}

}  // namespace

TwoModeFockState bs_output(int n1, int n2, double T, double R, double phi) {
  if (n1 < 0 || n2 < 0) throw InvalidArgument("bs_output: photon numbers must be non-negative");
  if (n1 + n2 > kMaxTotalPhotons) {
    throw InvalidArgument("bs_output: n1 + n2 = " + std::to_string(n1 + n2) +
                          " exceeds the cap of " + std::to_string(kMaxTotalPhotons));
  }
  if (!std::isfinite(T) || !std::isfinite(R) || !std::isfinite(phi) ||
      std::abs(T * T + R * R - 1.0) > kUnitarityTol) {
    throw InvalidArgument("bs_output: T^2 + R^2 must equal 1");
  }
  const int n = n1 + n2;
  std::vector<std::complex<long double>> acc(static_cast<std::size_t>(n) + 1);
  const long double log_norm = -0.5L * (std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0));
  for (int k1 = 0; k1 <= n1; ++k1) {
    for (int k2 = 0; k2 <= n2; ++k2) {
      const int k = k1 + k2;
      long double log_mag = log_binom(n1, k1) + log_binom(n2, k2) + log_norm +
                            0.5L * (std::lgamma(k + 1.0) + std::lgamma(n - k + 1.0));
      int sign = (n1 - k1) % 2 == 0 ? 1 : -1;
      if (!accumulate_power(T, k1 + n2 - k2, log_mag, sign)) continue;
      if (!accumulate_power(R, n1 - k1 + k2, log_mag, sign)) continue;
      const long double angle = static_cast<long double>(phi) * (k - n1);
      acc[static_cast<std::size_t>(k)] +=
          static_cast<long double>(sign) * std::exp(log_mag) *
          std::complex<long double>(std::cos(angle), std::sin(angle));
    }
  }
  long double total = 0.0L;
  for (const auto& c : acc) total += std::norm(c);
  if (std::abs(total - 1.0L) > kNormTol) {
    throw NumericalError("bs_output: output norm deviates from 1 by " +
                         std::to_string(static_cast<double>(total - 1.0L)));
  }
  TwoModeFockState out;
  out.total_photons = n;
  for (int k = 0; k <= n; ++k) {
    const std::complex<double> c(static_cast<double>(acc[k].real()),
                                 static_cast<double>(acc[k].imag()));
    if (std::abs(c) >= kAmplitudePrune) out.amplitudes[{k, n - k}] = c;
  }
  return out;
}

std::vector<double> photon_number_distribution(const TwoModeFockState& state, int mode) {
  if (mode != 0 && mode != 1) throw InvalidArgument("photon_number_distribution: mode must be 0 or 1");
  std::vector<double> p(static_cast<std::size_t>(state.total_photons) + 1, 0.0);
  for (const auto& [key, c] : state.amplitudes) {
    p[static_cast<std::size_t>(mode == 0 ? key.first : key.second)] += std::norm(c);
  }
  return p;
}

}  // namespace cvsim
