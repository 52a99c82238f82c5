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

#include "cvsim/homodyne.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include "cvsim/errors.hpp"
#include "cvsim/special.hpp"

namespace cvsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kCatImagTol = 1e-10;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

double gaussian(double x, double var) {
  return std::exp(-x * x / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

// Coefficient n! / (2^k k!^2 (n-k)!) of the Fock-state Hermite series.
double fock_coefficient(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - k * std::log(2.0) - 2.0 * std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

double squeezed_variance(double r, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return std::exp(-2.0 * r) * c * c + std::exp(2.0 * r) * s * s;
}

double spats_weight(double n_bar) { return (1.0 + n_bar) / (1.0 + 2.0 * n_bar); }

}  // namespace

double cat_normalization(const CatState& cat) {
  return 2.0 + 2.0 * std::cos(cat.theta) * std::exp(-2.0 * std::norm(cat.alpha));
}

void validate(const SourceModel& model) {
  std::visit(Overloaded{
                 [](const Fock& m) {
                   if (m.n < 0 || m.n > kMaxFockN) {
                     throw InvalidArgument(
                         fmt::format("fock: n must lie in [0, {}], got {}", kMaxFockN, m.n));
                   }
                 },
                 [](const Spats& m) {
                   if (!(m.n_bar > 0.0) || !std::isfinite(m.n_bar)) {
                     throw InvalidArgument("spats: n_bar must be positive and finite");
                   }
                 },
                 [](const SqueezedVacuum& m) {
                   if (!std::isfinite(m.r)) throw InvalidArgument("squeezed: r must be finite");
                 },
                 [](const CatState& m) {
                   if (!std::isfinite(m.alpha.real()) || !std::isfinite(m.alpha.imag()) ||
                       !std::isfinite(m.theta)) {
                     throw InvalidArgument("cat: parameters must be finite");
                   }
                   if (!(cat_normalization(m) > 1e-12)) {
                     throw InvalidArgument("cat: normalization vanishes (odd cat with alpha = 0)");
                   }
                 },
                 [](const Thermal& m) {
                   if (!(m.n_bar >= 0.0) || !std::isfinite(m.n_bar)) {
                     throw InvalidArgument("thermal: n_bar must be non-negative and finite");
                   }
                 },
                 [](const Vacuum&) {},
             },
             model);
}

std::string describe(const SourceModel& model) {
  return std::visit(
      Overloaded{
          [](const Fock& m) { return fmt::format("fock(n={})", m.n); },
          [](const Spats& m) { return fmt::format("spats(n_bar={})", m.n_bar); },
          [](const SqueezedVacuum& m) { return fmt::format("squeezed(r={})", m.r); },
          [](const CatState& m) {
            return fmt::format("cat(alpha={}{:+}i, theta={})", m.alpha.real(), m.alpha.imag(),
                               m.theta);
          },
          [](const Thermal& m) { return fmt::format("thermal(n_bar={})", m.n_bar); },
          [](const Vacuum&) { return std::string("vacuum"); },
      },
      model);
}

std::complex<double> characteristic_fn(const SourceModel& model, std::complex<double> beta) {
  using C = std::complex<double>;
  const double b2 = std::norm(beta);
  return std::visit(
      Overloaded{
          [&](const Fock& m) -> C { return std::exp(-0.5 * b2) * laguerre(m.n, b2); },
          [&](const Spats& m) -> C {
            return std::exp(-(0.5 + m.n_bar) * b2) * (1.0 - (1.0 + m.n_bar) * b2);
          },
          [&](const SqueezedVacuum& m) -> C {
            // -(b + b*)^2 e^{2r}/8 + (b - b*)^2 e^{-2r}/8 with b + b* = 2 Re b.
            const double re = beta.real();
            const double im = beta.imag();
            return std::exp(-0.5 * re * re * std::exp(2.0 * m.r) -
                            0.5 * im * im * std::exp(-2.0 * m.r));
          },
          [&](const CatState& m) -> C {
            const C ba = beta * std::conj(m.alpha);
            const double a2 = std::norm(m.alpha);
            const C i(0.0, 1.0);
            const C sum = std::exp(-0.5 * b2 + ba - std::conj(ba)) +
                          std::exp(-0.5 * b2 + i * m.theta + ba + std::conj(ba) - 2.0 * a2) +
                          std::exp(-0.5 * b2 - i * m.theta - ba - std::conj(ba) - 2.0 * a2) +
                          std::exp(-0.5 * b2 - ba + std::conj(ba));
            return sum / cat_normalization(m);
          },
          [&](const Thermal& m) -> C { return std::exp(-(m.n_bar + 0.5) * b2); },
          [&](const Vacuum&) -> C { return std::exp(-0.5 * b2); },
      },
      model);
}

double quadrature_pdf(const SourceModel& model, double x, double phi) {
  return std::visit(
      Overloaded{
          [&](const Fock& m) {
            double sum = 0.0;
            for (int k = 0; k <= m.n; ++k) {
              sum += fock_coefficient(m.n, k) * hermite(2 * k, x / kSqrt2);
            }
            // The expansion rounds to about -1e-16 at the nodes of H_n.
            return std::max(0.0, gaussian(x, 1.0) * sum);
          },
          [&](const Spats& m) {
            const double w = 1.0 + 2.0 * m.n_bar;
            return gaussian(x, w) * (1.0 - spats_weight(m.n_bar) * (1.0 - x * x / w));
          },
          [&](const SqueezedVacuum& m) { return gaussian(x, squeezed_variance(m.r, phi)); },
          [&](const CatState& m) {
            const std::complex<double> z = m.alpha * std::polar(1.0, phi);
            const double a = z.real();
            const double b = z.imag();
            const double outer = std::exp(-0.5 * (x - 2.0 * a) * (x - 2.0 * a)) +
                                 std::exp(-0.5 * (x + 2.0 * a) * (x + 2.0 * a));
            // The two interference terms are complex conjugates; their
            // decaying and growing exponentials are combined before exp().
            const double cross = 2.0 *
                                 std::exp(-2.0 * std::norm(m.alpha) + 2.0 * b * b - 0.5 * x * x) *
                                 std::cos(m.theta - 2.0 * x * b);
            return std::max(0.0, (outer + cross) / (std::sqrt(2.0 * kPi) * cat_normalization(m)));
          },
          [&](const Thermal& m) { return gaussian(x, 2.0 * m.n_bar + 1.0); },
          [&](const Vacuum&) { return gaussian(x, 1.0); },
      },
      model);
}

double quadrature_cdf(const SourceModel& model, double x, double phi) {
  const auto normal_cdf = [](double x, double var) {
    return 0.5 + 0.5 * std::erf(x / std::sqrt(2.0 * var));
  };
  return std::visit(
      Overloaded{
          [&](const Fock& m) {
            double sum = 0.0;
            for (int k = 1; k <= m.n; ++k) {
              sum += fock_coefficient(m.n, k) * hermite(2 * k - 1, x / kSqrt2);
            }
            return normal_cdf(x, 1.0) - std::exp(-0.5 * x * x) / std::sqrt(kPi) * sum;
          },
          [&](const Spats& m) {
            const double w = 4.0 * m.n_bar + 2.0;
            return normal_cdf(x, 0.5 * w) -
                   x / std::sqrt(kPi * w) * spats_weight(m.n_bar) * std::exp(-x * x / w);
          },
          [&](const SqueezedVacuum& m) { return normal_cdf(x, squeezed_variance(m.r, phi)); },
          [&](const CatState& m) {
            using C = std::complex<double>;
            const C z = m.alpha * std::polar(1.0, phi);
            const double a = z.real();
            const double b = z.imag();
            const double damp = 2.0 * std::norm(m.alpha);
            const C c1 = std::polar(1.0, m.theta);
            const C sum = std::erf((x - 2.0 * a) / kSqrt2) +
                          c1 * erf_scaled(C(x, 2.0 * b) / kSqrt2, damp) +
                          std::conj(c1) * erf_scaled(C(x, -2.0 * b) / kSqrt2, damp) +
                          std::erf((x + 2.0 * a) / kSqrt2);
            if (std::abs(sum.imag()) > kCatImagTol) {
              throw NumericalError(
                  fmt::format("cat cdf: imaginary residue {:.3g} at x={}", sum.imag(), x));
            }
            return 0.5 + sum.real() / (2.0 * cat_normalization(m));
          },
          [&](const Thermal& m) { return normal_cdf(x, 2.0 * m.n_bar + 1.0); },
          [&](const Vacuum&) { return normal_cdf(x, 1.0); },
      },
      model);
}

double pdf_numeric_oracle(const SourceModel& model, double x, double phi) {
  validate(model);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> dir = i * std::polar(1.0, -phi);
  const auto chi = [&](double y) { return characteristic_fn(model, y * dir); };

  // Cutoff: the smallest Y such that |chi| stays below 1e-14 on [Y, 2Y].
  const auto negligible_beyond = [&](double y) {
    for (int k = 0; k <= 40; ++k) {
      if (std::abs(chi(y * (1.0 + k / 40.0))) >= 1e-14) return false;
    }
    return true;
  };
  double cutoff = 1.0;
  while (!negligible_beyond(cutoff)) {
    cutoff *= 1.25;
    if (cutoff > 1e4) throw NumericalError("pdf_numeric_oracle: characteristic function does not decay");
  }

  // chi(-beta) = conj(chi(beta)), so the integrand over y < 0 mirrors y > 0.
  const auto integrand = [&](double y) { return (chi(y) * std::exp(-i * (y * x))).real(); };
  double total = 0.0;
  double total_error = 0.0;
  const int pieces = static_cast<int>(std::ceil(cutoff));
  for (int k = 0; k < pieces; ++k) {
    const double lo = cutoff * k / pieces;
    const double hi = cutoff * (k + 1) / pieces;
    double error = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, lo, hi, 10,
                                                                           1e-14, &error);
    total_error += error;
  }
  if (!std::isfinite(total) || total_error > 1e-11) {
    throw NumericalError(fmt::format(
        "pdf_numeric_oracle: integral did not converge (error estimate {:.3g})", total_error));
  }
  return total / kPi;
}

double invert_cdf(const SourceModel& model, double phi, double u, double tol, double bracket) {
  if (!(u > 0.0 && u < 1.0)) throw InvalidArgument("invert_cdf: u must lie in (0, 1)");
  if (!(tol > 0.0)) throw InvalidArgument("invert_cdf: tol must be positive");
  if (!(bracket > 0.0)) throw InvalidArgument("invert_cdf: bracket must be positive");
  double lo = -bracket;
  double hi = bracket;
  for (int doubling = 0;; ++doubling) {
    if (quadrature_cdf(model, lo, phi) <= u && quadrature_cdf(model, hi, phi) >= u) break;
    if (doubling == kBracketDoublings) {
      throw NumericalError(fmt::format(
          "invert_cdf: target {} not bracketed by +-{} for {}", u, hi, describe(model)));
    }
    lo *= 2.0;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating resolution
    if (quadrature_cdf(model, mid, phi) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SampleSet sample(const SourceModel& model, std::size_t count, std::uint64_t seed,
                 const SampleOptions& options) {
  validate(model);
  if (count == 0) throw InvalidArgument("sample: count must be at least 1");
  std::mt19937_64 gen(seed);
  constexpr double kUnit = 0x1.0p-53;
  std::vector<double> phases(count);
  for (auto& phi : phases) {
    phi = 2.0 * kPi * (static_cast<double>(gen() >> 11) * kUnit) - kPi;
    if (phi >= kPi) phi = std::nextafter(kPi, 0.0);
  }
  std::vector<double> targets(count);
  for (auto& t : targets) t = (static_cast<double>(gen() >> 11) + 0.5) * kUnit;
  if (options.sorted_targets) std::sort(targets.begin(), targets.end());

  SampleSet out;
  out.model = model;
  out.seed = seed;
  out.records.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.records[k] = {phases[k],
                      invert_cdf(model, phases[k], targets[k], options.tol, options.bracket)};
  }
  return out;
}

double theoretical_variance(const SourceModel& model, double phi) {
  return std::visit(
      Overloaded{
          [](const Fock& m) { return 2.0 * m.n + 1.0; },
          [](const Spats& m) { return 4.0 * m.n_bar + 3.0; },
          [&](const SqueezedVacuum& m) {
            return std::norm(std::polar(1.0, phi) * std::cosh(m.r) -
                             std::polar(1.0, -phi) * std::sinh(m.r));
          },
          [&](const CatState& m) {
            const double norm = cat_normalization(m);
            const double a2 = std::norm(m.alpha);
            const double b = (m.alpha * std::polar(1.0, phi)).imag();
            const double s = std::sin(m.theta) * std::exp(-2.0 * a2) / norm;
            return 1.0 + 8.0 * a2 / norm - 4.0 * b * b * (1.0 + 4.0 * s * s);
          },
          [](const Thermal& m) { return 2.0 * m.n_bar + 1.0; },
          [](const Vacuum&) { return 1.0; },
      },
      model);
}

double VarianceReport::variance_standard_error(std::size_t bin) const {
  if (counts.at(bin) < 2) return std::nan("");
  return estimated_variance[bin] * std::sqrt(2.0 / static_cast<double>(counts[bin] - 1));
}

double VarianceReport::product_standard_error(std::size_t bin) const {
  const std::size_t partner = (bin + shift) % num_bins();
  const double vi = estimated_variance.at(bin);
  const double vj = estimated_variance.at(partner);
  const double si = variance_standard_error(bin);
  const double sj = variance_standard_error(partner);
  return std::hypot(vj * si, vi * sj);
}

VarianceReport binned_variance(const std::vector<QuadratureRecord>& records, std::size_t num_bins,
                               const std::optional<SourceModel>& model) {
  if (records.empty()) throw InvalidArgument("binned_variance: empty sample set");
  if (num_bins < 4) throw InvalidArgument("binned_variance: num_bins must be at least 4");
  if (model) validate(*model);
  const double width = 2.0 * kPi / static_cast<double>(num_bins);

  // Welford accumulation per bin.
  std::vector<double> mean(num_bins, 0.0);
  std::vector<double> m2(num_bins, 0.0);
  VarianceReport rep;
  rep.counts.assign(num_bins, 0);
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& rec = records[k];
    if (!(rec.phase >= -kPi && rec.phase < kPi) || !std::isfinite(rec.value)) {
      throw InvalidArgument(fmt::format("binned_variance: record {} has phase {} outside [-pi, pi)"
                                        " or a non-finite value",
                                        k, rec.phase));
    }
    auto bin = static_cast<std::size_t>((rec.phase + kPi) / width);
    bin = std::min(bin, num_bins - 1);
    const double n = static_cast<double>(++rep.counts[bin]);
    const double delta = rec.value - mean[bin];
    mean[bin] += delta / n;
    m2[bin] += delta * (rec.value - mean[bin]);
  }

  const double nan = std::nan("");
  rep.shift = num_bins / 4;
  for (std::size_t b = 0; b < num_bins; ++b) {
    const double center = -kPi + (static_cast<double>(b) + 0.5) * width;
    rep.bin_centers.push_back(center);
    rep.estimated_variance.push_back(rep.counts[b] < 2 ? nan
                                                      : m2[b] / static_cast<double>(rep.counts[b] - 1));
    rep.theoretical_variance.push_back(model ? theoretical_variance(*model, center) : nan);
  }
  for (std::size_t b = 0; b < num_bins; ++b) {
    const double shifted = rep.estimated_variance[(b + rep.shift) % num_bins];
    rep.shifted_variance.push_back(shifted);
    rep.variance_product.push_back(rep.estimated_variance[b] * shifted);
    rep.normally_ordered_variance.push_back(rep.estimated_variance[b] - 1.0);
  }
  return rep;
}

VarianceReport binned_variance(const SampleSet& samples, std::size_t num_bins) {
  return binned_variance(samples.records, num_bins, samples.model);
}

std::vector<bool> squeezing_certificate(const VarianceReport& report, double sigma_level) {
  std::vector<bool> out(report.num_bins(), false);
  for (std::size_t b = 0; b < report.num_bins(); ++b) {
    const double bound =
        report.normally_ordered_variance[b] + sigma_level * report.variance_standard_error(b);
    out[b] = bound < 0.0;  // false for NaN bins
  }
  return out;
}

std::vector<std::size_t> heisenberg_violations(const VarianceReport& report, double sigma_level) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < report.num_bins(); ++b) {
    const double bound = report.variance_product[b] + sigma_level * report.product_standard_error(b);
    if (bound < 1.0) out.push_back(b);
  }
  return out;
}

}  // namespace cvsim
