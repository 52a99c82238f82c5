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

#include "cvsim/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "cvsim/errors.hpp"
#include "cvsim/fock.hpp"
#include "cvsim/gates.hpp"
#include "cvsim/homodyne.hpp"
#include "cvsim/io.hpp"
#include "cvsim/network_json.hpp"
#include "cvsim/phase_space.hpp"

namespace cvsim {

namespace {

using ojson = nlohmann::ordered_json;

// Homodyne source flags shared by `sample` and `analyze`.
struct ModelFlags {
  std::string state;
  std::optional<int> n;
  std::optional<double> nbar;
  std::optional<double> r;
  std::optional<double> alpha_re;
  double alpha_im = 0.0;
  double theta = 0.0;

  void add_to(CLI::App& app, bool required) {
    auto* opt = app.add_option("--state", state, "Source: fock|spats|squeezed|cat|thermal|vacuum")
                    ->check(CLI::IsMember({"fock", "spats", "squeezed", "cat", "thermal", "vacuum"}));
    if (required) opt->required();
    app.add_option("--n", n, "Fock photon number (0..10)");
    app.add_option("--nbar", nbar, "Mean thermal photon number (spats, thermal)");
    app.add_option("--r", r, "Squeezing parameter");
    app.add_option("--alpha-re", alpha_re, "Cat amplitude, real part");
    app.add_option("--alpha-im", alpha_im, "Cat amplitude, imaginary part");
    app.add_option("--theta", theta, "Cat superposition phase");
  }

  std::optional<SourceModel> build() const {
    if (state.empty()) return std::nullopt;
    const auto need = [&](const auto& v, const char* flag) {
      if (!v) throw InvalidArgument(fmt::format("--state {} requires {}", state, flag));
      return *v;
    };
    SourceModel model = Vacuum{};
    if (state == "fock") model = Fock{need(n, "--n")};
    if (state == "spats") model = Spats{need(nbar, "--nbar")};
    if (state == "squeezed") model = SqueezedVacuum{need(r, "--r")};
    if (state == "cat") model = CatState{{need(alpha_re, "--alpha-re"), alpha_im}, theta};
    if (state == "thermal") model = Thermal{need(nbar, "--nbar")};
    validate(model);
    return model;
  }
};

struct SampleCmd {
  ModelFlags model;
  std::size_t count = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string out = "samples.csv";
  double tol = kBisectionTol;
  bool sorted = false;
};

struct AnalyzeCmd {
  ModelFlags model;
  std::string in;
  std::size_t bins = 50;
  double sigma = 3.0;
  std::string out = "variance.csv";
};

struct NetworkCmd {
  std::string config;
  std::string out;
};

struct FockCmd {
  int n1 = 0;
  int n2 = 0;
  double theta = std::numbers::pi / 4;
  double phi = 0.0;
  std::string out;
};

struct WignerCmd {
  double hbar = kDefaultHbar;
  double nbar = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  PhaseSpaceGrid grid;
  std::string out = "wigner.csv";
};

int cmd_sample(const SampleCmd& c, std::ostream& out) {
  const SourceModel model = *c.model.build();
  if (!(c.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  SampleOptions opts;
  opts.tol = c.tol;
  opts.sorted_targets = c.sorted;
  const SampleSet set = sample(model, c.count, c.seed, opts);
  std::ostringstream csv;
  write_samples_csv(csv, set.records);
  write_text_file(c.out, csv.str());

  double mean = 0.0;
  for (const auto& r : set.records) mean += r.value;
  mean /= static_cast<double>(set.records.size());
  double ss = 0.0;
  for (const auto& r : set.records) ss += (r.value - mean) * (r.value - mean);
  const double var = set.records.size() > 1 ? ss / static_cast<double>(set.records.size() - 1)
                                            : std::nan("");
  out << "state: " << describe(model) << '\n'
      << "count: " << set.records.size() << '\n'
      << "seed: " << set.seed << '\n'
      << "mean: " << format_double(mean) << '\n'
      << "variance: " << format_double(var) << '\n'
      << "output: " << c.out << '\n';
  return kExitOk;
}

int cmd_analyze(const AnalyzeCmd& c, std::ostream& out) {
  const auto model = c.model.build();
  if (c.bins < 4) throw InvalidArgument("--bins must be at least 4");
  if (!(c.sigma >= 0.0)) throw InvalidArgument("--sigma must be non-negative");
  std::istringstream is(read_text_file(c.in));
  std::vector<QuadratureRecord> records;
  VarianceReport report;
  try {
    records = read_samples_csv(is);
    report = binned_variance(records, c.bins, model);
  } catch (const InvalidArgument& e) {
    // Bad data is an input failure, not a usage error.
    throw MalformedInput(c.in + ": " + e.what());
  }
  std::ostringstream csv;
  write_variance_csv(csv, report);
  write_text_file(c.out, csv.str());

  const auto violations = heisenberg_violations(report, c.sigma);
  const auto certified = squeezing_certificate(report, c.sigma);
  std::vector<std::string> phis;
  for (std::size_t b = 0; b < certified.size(); ++b) {
    if (certified[b]) phis.push_back(fmt::format("{:.6f}", report.bin_centers[b]));
  }
  out << "records: " << records.size() << '\n'
      << "bins: " << report.num_bins() << " (partner shift " << report.shift << ")\n"
      << "heisenberg_violations: " << violations.size() << '\n'
      << "squeezing_certified_bins: " << phis.size() << '\n'
      << "squeezing_certified_phi: [" << fmt::format("{}", fmt::join(phis, ", ")) << "]\n"
      << "output: " << c.out << '\n';
  return kExitOk;
}

int cmd_network(const NetworkCmd& c, std::ostream& out) {
  const NetworkSpec spec = load_network_spec(c.config);
  const auto result = run_network<double>(spec);
  const std::string text = dump_json(to_json(spec, result)) + "\n";
  if (c.out.empty()) {
    out << text;
    return kExitOk;
  }
  write_text_file(c.out, text);
  out << "modes: " << spec.num_modes << '\n' << "gates: " << spec.gates.size() << '\n';
  for (std::size_t k = 0; k < result.analyses.size(); ++k) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          out << "analysis " << k << ": ";
          if constexpr (std::is_same_v<T, ReducedResult<double>>) {
            out << "reduced state on " << r.modes.size() << " mode(s)";
          } else if constexpr (std::is_same_v<T, SimonResult<double>>) {
            out << "simon " << to_string(r.report.verdict);
          } else if constexpr (std::is_same_v<T, LogNegativityResult<double>>) {
            out << "log_negativity " << format_double(r.value);
          } else {
            out << "wigner normalization " << format_double(r.field.normalization());
          }
          out << '\n';
        },
        result.analyses[k]);
  }
  out << "output: " << c.out << '\n';
  return kExitOk;
}

int cmd_fock_bs(const FockCmd& c, std::ostream& out) {
  const TwoModeFockState state =
      bs_output(c.n1, c.n2, std::cos(c.theta), std::sin(c.theta), c.phi);
  ojson amps = ojson::array();
  for (const auto& [key, amp] : state.amplitudes) {  // std::map: ascending k
    amps.push_back({{"basis", {key.first, key.second}}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  ojson doc = {{"n1", c.n1},
               {"n2", c.n2},
               {"theta", c.theta},
               {"phi", c.phi},
               {"total_photons", state.total_photons},
               {"amplitudes", amps},
               {"marginals",
                {{"mode0", photon_number_distribution(state, 0)},
                 {"mode1", photon_number_distribution(state, 1)}}}};
  const std::string text = dump_json(doc) + "\n";
  if (c.out.empty()) {
    out << text;
  } else {
    write_text_file(c.out, text);
    out << "amplitudes: " << state.amplitudes.size() << '\n' << "output: " << c.out << '\n';
  }
  return kExitOk;
}

int cmd_wigner(const WignerCmd& c, std::ostream& out) {
  c.grid.validate();
  auto state = vacuum_state<double>(1, c.hbar);
  state = thermal_prepare(c.nbar, 0, state);
  state = apply(squeeze_gate(c.r, c.theta, 0, 1), state);
  const std::complex<double> alpha(c.alpha_re, c.alpha_im);
  state = apply(displacement_gate(std::abs(alpha), std::arg(alpha), 0, 1, c.hbar), state);
  const WignerField<double> field = wigner_gaussian(state, c.grid, 0);
  std::ostringstream csv;
  write_wigner_csv(csv, field);
  write_text_file(c.out, csv.str());

  Eigen::Index pi = 0;
  Eigen::Index pj = 0;
  const double peak = field.values.maxCoeff(&pi, &pj);
  // Moments of the x marginal from the grid.
  const double norm = field.normalization();
  double mx = 0.0;
  double mxx = 0.0;
  for (std::size_t i = 0; i < c.grid.nx; ++i) {
    const double w = field.values.row(static_cast<Eigen::Index>(i)).sum() * c.grid.dx() * c.grid.dp();
    mx += w * c.grid.x(i);
    mxx += w * c.grid.x(i) * c.grid.x(i);
  }
  mx /= norm;
  mxx /= norm;
  out << "normalization: " << format_double(norm) << '\n'
      << "peak: " << format_double(peak) << " at (" << format_double(c.grid.x(pi)) << ", "
      << format_double(c.grid.p(pj)) << ")\n"
      << "x_marginal_mean: " << format_double(mx) << '\n'
      << "x_marginal_variance: " << format_double(mxx - mx * mx) << '\n'
      << "output: " << c.out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cvsim: continuous-variable Gaussian-state and homodyne simulation"};
  app.require_subcommand(1);

  SampleCmd sample_cmd;
  auto* sample_app = app.add_subcommand("sample", "Simulate homodyne samples to CSV");
  sample_cmd.model.add_to(*sample_app, true);
  sample_app->add_option("--count", sample_cmd.count, "Number of records")
      ->check(CLI::PositiveNumber);
  sample_app->add_option("--seed", sample_cmd.seed, "Generator seed")->capture_default_str();
  sample_app->add_option("--out", sample_cmd.out, "Output CSV")->capture_default_str();
  sample_app->add_option("--tol", sample_cmd.tol, "Bisection tolerance")->capture_default_str();
  sample_app->add_flag("--sorted", sample_cmd.sorted, "Sort uniform targets before inversion");

  AnalyzeCmd analyze_cmd;
  auto* analyze_app = app.add_subcommand("analyze", "Binned variance analysis of a sample CSV");
  analyze_app->add_option("--in", analyze_cmd.in, "Input sample CSV")->required();
  analyze_app->add_option("--bins", analyze_cmd.bins, "Number of phase bins")->capture_default_str();
  analyze_app->add_option("--sigma", analyze_cmd.sigma, "Significance level")->capture_default_str();
  analyze_app->add_option("--out", analyze_cmd.out, "Output CSV")->capture_default_str();
  analyze_cmd.model.add_to(*analyze_app, false);

  NetworkCmd network_cmd;
  auto* network_app = app.add_subcommand("network", "Run a JSON network description");
  network_app->add_option("--config", network_cmd.config, "Network JSON")->required();
  network_app->add_option("--out", network_cmd.out, "Output JSON (stdout if omitted)");

  FockCmd fock_cmd;
  auto* fock_app = app.add_subcommand("fock-bs", "Beam-splitter output for |n1, n2>");
  fock_app->add_option("--n1", fock_cmd.n1, "Photons in input 1")->required();
  fock_app->add_option("--n2", fock_cmd.n2, "Photons in input 2")->required();
  fock_app->add_option("--theta", fock_cmd.theta, "Mixing angle (T = cos, R = sin)")
      ->capture_default_str();
  fock_app->add_option("--phi", fock_cmd.phi, "Phase")->capture_default_str();
  fock_app->add_option("--out", fock_cmd.out, "Output JSON (stdout if omitted)");

  WignerCmd wigner_cmd;
  auto* wigner_app = app.add_subcommand(
      "wigner", "Wigner grid of D(alpha) S(r, theta) acting on a thermal state");
  wigner_app->add_option("--hbar", wigner_cmd.hbar)->capture_default_str();
  wigner_app->add_option("--nbar", wigner_cmd.nbar, "Thermal photon number")->capture_default_str();
  wigner_app->add_option("--r", wigner_cmd.r, "Squeezing magnitude")->capture_default_str();
  wigner_app->add_option("--theta", wigner_cmd.theta, "Squeezing angle")->capture_default_str();
  wigner_app->add_option("--alpha-re", wigner_cmd.alpha_re)->capture_default_str();
  wigner_app->add_option("--alpha-im", wigner_cmd.alpha_im)->capture_default_str();
  wigner_app->add_option("--x-min", wigner_cmd.grid.x_min)->capture_default_str();
  wigner_app->add_option("--x-max", wigner_cmd.grid.x_max)->capture_default_str();
  wigner_app->add_option("--p-min", wigner_cmd.grid.p_min)->capture_default_str();
  wigner_app->add_option("--p-max", wigner_cmd.grid.p_max)->capture_default_str();
  wigner_app->add_option("--nx", wigner_cmd.grid.nx)->capture_default_str();
  wigner_app->add_option("--np", wigner_cmd.grid.np)->capture_default_str();
  wigner_app->add_option("--out", wigner_cmd.out, "Output CSV")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (*sample_app) return cmd_sample(sample_cmd, out);
    if (*analyze_app) return cmd_analyze(analyze_cmd, out);
    if (*network_app) return cmd_network(network_cmd, out);
    if (*fock_app) return cmd_fock_bs(fock_cmd, out);
    return cmd_wigner(wigner_cmd, out);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace cvsim
