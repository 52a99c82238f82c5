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

#include "cvsim/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cvsim/errors.hpp"

namespace cvsim {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.17g}", v);
}

namespace {

// Splits on commas and parses every field as a double. Throws MalformedInput
// naming `line_no` on any malformed field or a wrong field count.
std::vector<double> parse_row(const std::string& line, std::size_t line_no, std::size_t fields) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string tok = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
    if (tok.empty()) throw MalformedInput(fmt::format("line {}: empty field", line_no));
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || errno == ERANGE) {
      throw MalformedInput(fmt::format("line {}: cannot parse '{}' as a number", line_no, tok));
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != fields) {
    throw MalformedInput(
        fmt::format("line {}: expected {} fields, found {}", line_no, fields, out.size()));
  }
  return out;
}

bool next_line(std::istream& is, std::string& line) {
  if (!std::getline(is, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

// Reads the header, then every non-empty data row.
std::vector<std::vector<double>> read_table(std::istream& is, const std::string& header) {
  std::string line;
  if (!next_line(is, line)) throw MalformedInput("line 1: missing header");
  if (line != header) {
    throw MalformedInput(fmt::format("line 1: expected header '{}', found '{}'", header, line));
  }
  const std::size_t fields = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (next_line(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    rows.push_back(parse_row(line, line_no, fields));
  }
  if (rows.empty()) throw MalformedInput(fmt::format("line {}: no data rows", line_no + 1));
  return rows;
}

constexpr const char* kSamplesHeader = "phase,x";
constexpr const char* kVarianceHeader = "phi,count,var_est,var_theory,var_shifted,product,normally_ordered";
constexpr const char* kWignerHeader = "x,p,w";

}  // namespace

void write_samples_csv(std::ostream& os, const std::vector<QuadratureRecord>& records) {
  os << kSamplesHeader << '\n';
  for (const auto& r : records) os << format_double(r.phase) << ',' << format_double(r.value) << '\n';
}

std::vector<QuadratureRecord> read_samples_csv(std::istream& is) {
  std::vector<QuadratureRecord> out;
  for (const auto& row : read_table(is, kSamplesHeader)) out.push_back({row[0], row[1]});
  return out;
}

void write_variance_csv(std::ostream& os, const VarianceReport& report) {
  os << kVarianceHeader << '\n';
  for (std::size_t b = 0; b < report.num_bins(); ++b) {
    os << format_double(report.bin_centers[b]) << ',' << report.counts[b] << ','
       << format_double(report.estimated_variance[b]) << ','
       << format_double(report.theoretical_variance[b]) << ','
       << format_double(report.shifted_variance[b]) << ','
       << format_double(report.variance_product[b]) << ','
       << format_double(report.normally_ordered_variance[b]) << '\n';
  }
}

VarianceReport read_variance_csv(std::istream& is) {
  VarianceReport rep;
  for (const auto& row : read_table(is, kVarianceHeader)) {
    if (!(row[1] >= 0.0) || row[1] != std::floor(row[1])) {
      throw MalformedInput("variance csv: count must be a non-negative integer");
    }
    rep.bin_centers.push_back(row[0]);
    rep.counts.push_back(static_cast<std::size_t>(row[1]));
    rep.estimated_variance.push_back(row[2]);
    rep.theoretical_variance.push_back(row[3]);
    rep.shifted_variance.push_back(row[4]);
    rep.variance_product.push_back(row[5]);
    rep.normally_ordered_variance.push_back(row[6]);
  }
  rep.shift = rep.num_bins() / 4;
  return rep;
}

void write_wigner_csv(std::ostream& os, const WignerField<double>& field) {
  os << kWignerHeader << '\n';
  for (std::size_t i = 0; i < field.grid.nx; ++i) {
    for (std::size_t j = 0; j < field.grid.np; ++j) {
      os << format_double(field.grid.x(i)) << ',' << format_double(field.grid.p(j)) << ','
         << format_double(field.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
         << '\n';
    }
  }
}

WignerField<double> read_wigner_csv(std::istream& is) {
  const auto rows = read_table(is, kWignerHeader);
  // Row-major: p varies fastest, so the first run of equal x gives np.
  std::size_t np = 0;
  while (np < rows.size() && rows[np][0] == rows[0][0]) ++np;
  if (np < 2 || rows.size() % np != 0 || rows.size() / np < 2) {
    throw MalformedInput("wigner csv: rows do not form a rectangular grid of at least 2x2");
  }
  const std::size_t nx = rows.size() / np;
  PhaseSpaceGrid grid;
  grid.x_min = rows.front()[0];
  grid.x_max = rows.back()[0];
  grid.p_min = rows.front()[1];
  grid.p_max = rows[np - 1][1];
  grid.nx = nx;
  grid.np = np;
  grid.validate();
  WignerField<double> field{grid, Matrix<double>(static_cast<Eigen::Index>(nx),
                                                 static_cast<Eigen::Index>(np))};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    field.values(static_cast<Eigen::Index>(k / np), static_cast<Eigen::Index>(k % np)) = rows[k][2];
  }
  return field;
}

namespace {

void emit(std::string& out, const nlohmann::ordered_json& v, int indent, int depth) {
  using json = nlohmann::ordered_json;
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested structures break.
      bool flat = true;
      for (const auto& e : v) flat = flat && !e.is_structured();
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        emit(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
      } else {
        std::string s = format_double(d);
        // Keep floats recognizable as floats when they print as integers.
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        out += s;
      }
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& value, int indent) {
  std::string out;
  emit(out, value, indent, 0);
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  os << contents;
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace cvsim
