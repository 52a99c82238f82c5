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

#ifndef CVSIM_FOCK_HPP
#define CVSIM_FOCK_HPP

// Two-mode photon-number states produced by a lossless beam splitter acting
// on |n1, n2>.

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace cvsim {

inline constexpr int kMaxTotalPhotons = 40;
inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kAmplitudePrune = 1e-15;

struct TwoModeFockState {
  // Key (k, m) is the ket |k, m>; every key has k + m == total_photons.
  std::map<std::pair<int, int>, std::complex<double>> amplitudes;
  int total_photons = 0;

  double norm_squared() const;
  std::complex<double> amplitude(int k, int m) const;
};

/// Output of a beam splitter with transmission T, reflection R and phase
/// phi for input |n1, n2>. Requires T^2 + R^2 = 1 and n1 + n2 <= 40.
TwoModeFockState bs_output(int n1, int n2, double T, double R, double phi);

/// Photon-number marginal of output arm `mode` (0 or 1), indexed 0..n.
std::vector<double> photon_number_distribution(const TwoModeFockState& state, int mode);

}  // namespace cvsim

#endif  // CVSIM_FOCK_HPP
