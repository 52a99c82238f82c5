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

#include "cvsim/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvsim/errors.hpp"

namespace cvsim {

double hermite(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double x) {
  if (n < 0) throw InvalidArgument("laguerre: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// sin(t)/t with the removable singularity filled in.
double sinc(double t) {
  if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}

}  // namespace

// Abramowitz & Stegun 7.1.29, with every exponential carrying the extra
// e^{-shift}. The sinc forms replace the 1/x prefactor so x = 0 needs no
// special case.
std::complex<double> erf_scaled(std::complex<double> w, double shift) {
  const double x = w.real();
  const double y = w.imag();
  const double pi = std::numbers::pi;
  const double base = std::exp(-x * x - shift);
  double re = std::exp(-shift) * std::erf(x) + base / pi * x * y * y * sinc(x * y) * sinc(x * y);
  double im = base / pi * y * sinc(2.0 * x * y);
  const double c2 = std::cos(2.0 * x * y);
  const double s2 = std::sin(2.0 * x * y);
  const int terms = static_cast<int>(std::ceil(2.0 * std::abs(y))) + 15;
  double sum_re = 0.0;
  double sum_im = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double a = -0.25 * n * n - x * x - shift;
    const double ep = 0.5 * std::exp(a + n * y);
    const double em = 0.5 * std::exp(a - n * y);
    const double denom = n * n + 4.0 * x * x;
    sum_re += (2.0 * x * std::exp(a) - 2.0 * x * (ep + em) * c2 + n * (ep - em) * s2) / denom;
    sum_im += (2.0 * x * (ep + em) * s2 + n * (ep - em) * c2) / denom;
  }
  re += 2.0 / pi * sum_re;
  im += 2.0 / pi * sum_im;
  return {re, im};
}

}  // namespace cvsim
