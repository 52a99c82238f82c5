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

#ifndef CVSIM_HOMODYNE_HPP
#define CVSIM_HOMODYNE_HPP

// Balanced homodyne detection of single-mode sources: closed-form quadrature
// statistics, inverse-CDF sampling and binned variance analysis. Quadratures
// are scaled so the vacuum variance is 1. Phases live in [-pi, pi).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cvsim {

struct Fock {
  int n = 0;  // 0..10
};
struct Spats {
  double n_bar = 1.0;  // > 0
};
struct SqueezedVacuum {
  double r = 0.0;
};
struct CatState {
  std::complex<double> alpha;
  double theta = 0.0;  // |alpha> + e^{i theta} |-alpha>
};
struct Thermal {
  double n_bar = 0.0;  // >= 0
};
struct Vacuum {};

using SourceModel = std::variant<Fock, Spats, SqueezedVacuum, CatState, Thermal, Vacuum>;

inline constexpr int kMaxFockN = 10;
inline constexpr double kBisectionTol = 1e-12;
inline constexpr double kBisectionBracket = 50.0;
inline constexpr int kBracketDoublings = 4;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Throws InvalidArgument when parameters are out of range.
void validate(const SourceModel& model);
std::string describe(const SourceModel& model);

/// Normalization 2 + 2 cos(theta) e^{-2|alpha|^2}.
double cat_normalization(const CatState& cat);

std::complex<double> characteristic_fn(const SourceModel& model, std::complex<double> beta);
double quadrature_pdf(const SourceModel& model, double x, double phi);
double quadrature_cdf(const SourceModel& model, double x, double phi);

/// p(x, phi) = 1/(2 pi) * integral of chi(i y e^{-i phi}) e^{-i y x} dy by
/// adaptive Gauss-Kronrod quadrature. Intended for validating closed forms.
double pdf_numeric_oracle(const SourceModel& model, double x, double phi);

/// Root of cdf(x, phi) = u by bisection to absolute tolerance tol.
double invert_cdf(const SourceModel& model, double phi, double u, double tol = kBisectionTol,
                  double bracket = kBisectionBracket);

struct QuadratureRecord {
  double phase = 0.0;
  double value = 0.0;
};

struct SampleSet {
  std::vector<QuadratureRecord> records;
  std::optional<SourceModel> model;
  std::uint64_t seed = kDefaultSeed;
};

struct SampleOptions {
  double tol = kBisectionTol;
  double bracket = kBisectionBracket;
  // Sort the uniform targets before inversion, as the reference lab code
  // does. Off by default: sorting couples the quantile to the record index.
  bool sorted_targets = false;
};

/// Draws `count` phases and then `count` targets from mt19937_64(seed) and
/// inverts each pair. Bit-reproducible for fixed arguments.
SampleSet sample(const SourceModel& model, std::size_t count, std::uint64_t seed = kDefaultSeed,
                 const SampleOptions& options = {});

/// Variance of the quadrature at phase phi (vacuum = 1).
double theoretical_variance(const SourceModel& model, double phi);

struct VarianceReport {
  std::vector<double> bin_centers;
  std::vector<double> estimated_variance;
  std::vector<double> theoretical_variance;
  std::vector<double> shifted_variance;
  std::vector<double> variance_product;
  std::vector<double> normally_ordered_variance;
  std::vector<std::size_t> counts;
  // Bin offset used for the phi + pi/2 partner (num_bins / 4, integer
  // division, cyclic).
  std::size_t shift = 0;

  std::size_t num_bins() const { return bin_centers.size(); }
  /// Normal-theory standard error var * sqrt(2 / (count - 1)); NaN if count < 2.
  double variance_standard_error(std::size_t bin) const;
  double product_standard_error(std::size_t bin) const;
};

/// Equal-width phase bins over [-pi, pi) with unbiased per-bin variances.
/// Bins with fewer than two samples hold NaN. The theoretical column is NaN
/// unless a model is supplied or attached to the sample set.
VarianceReport binned_variance(const std::vector<QuadratureRecord>& records, std::size_t num_bins,
                               const std::optional<SourceModel>& model = std::nullopt);
VarianceReport binned_variance(const SampleSet& samples, std::size_t num_bins);

/// Per-bin flag: normally ordered variance + sigma * SE < 0.
std::vector<bool> squeezing_certificate(const VarianceReport& report, double sigma_level);

/// Bins whose Heisenberg product stays below 1 by more than sigma * SE.
std::vector<std::size_t> heisenberg_violations(const VarianceReport& report, double sigma_level);

}  // namespace cvsim

#endif  // CVSIM_HOMODYNE_HPP
