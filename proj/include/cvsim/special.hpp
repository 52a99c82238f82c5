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

#ifndef CVSIM_SPECIAL_HPP
#define CVSIM_SPECIAL_HPP

#include <complex>

namespace cvsim {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre(int n, double x);

/// e^{-shift} * erf(w) for complex w.
///
/// erf(x + iy) grows like e^{y^2}; folding a damping factor into the
/// exponents keeps products such as e^{-2|a|^2} erf(x + iy) finite where the
/// unscaled value would overflow or lose digits. Accurate to roughly 1e-15
/// relative to max(|result|, e^{-shift}).
std::complex<double> erf_scaled(std::complex<double> w, double shift = 0.0);

inline std::complex<double> erf(std::complex<double> w) { return erf_scaled(w, 0.0); }

}  // namespace cvsim

#endif  // CVSIM_SPECIAL_HPP
