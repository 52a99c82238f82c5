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

#ifndef CVSIM_IO_HPP
#define CVSIM_IO_HPP

// Text formats: CSV for sample sets, variance reports and Wigner grids, and
// a JSON writer that prints every double with 17 significant digits. All
// output uses LF line endings. Readers report the first bad line.

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "cvsim/homodyne.hpp"
#include "cvsim/phase_space.hpp"

namespace cvsim {

/// 17 significant digits; "nan" for NaN.
std::string format_double(double v);

void write_samples_csv(std::ostream& os, const std::vector<QuadratureRecord>& records);
std::vector<QuadratureRecord> read_samples_csv(std::istream& is);

void write_variance_csv(std::ostream& os, const VarianceReport& report);
VarianceReport read_variance_csv(std::istream& is);

void write_wigner_csv(std::ostream& os, const WignerField<double>& field);
WignerField<double> read_wigner_csv(std::istream& is);

/// Serializes with floats at 17 significant digits (NaN and infinities as
/// null). indent < 0 gives a single line.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

/// Whole-file helpers. Open failures throw std::runtime_error.
void write_text_file(const std::filesystem::path& path, const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace cvsim

#endif  // CVSIM_IO_HPP
