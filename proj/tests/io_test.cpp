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
#include <filesystem>
#include <limits>
#include <sstream>

#include "cvsim/errors.hpp"
#include "cvsim/gates.hpp"
#include "cvsim/homodyne.hpp"
#include "cvsim/io.hpp"
#include "cvsim/phase_space.hpp"

namespace cvsim {
namespace {

std::string error_of(const std::string& text) {
  std::istringstream is(text);
  try {
    read_samples_csv(is);
  } catch (const MalformedInput& e) {
    return e.what();
  }
  return "";
}

TEST(FormatDouble, RoundTripsExactly) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::nextafter(1.0, 2.0)}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(SamplesCsv, RoundTrip) {
  const auto s = sample(SqueezedVacuum{0.7}, 300, 9);
  std::ostringstream os;
  write_samples_csv(os, s.records);
  EXPECT_EQ(os.str().substr(0, 8), "phase,x\n");
  std::istringstream is(os.str());
  const auto back = read_samples_csv(is);
  ASSERT_EQ(back.size(), s.records.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    EXPECT_EQ(back[k].phase, s.records[k].phase);
    EXPECT_EQ(back[k].value, s.records[k].value);
  }
}

TEST(SamplesCsv, ToleratesCrlfAndBlankLines) {
  std::istringstream is("phase,x\r\n0.5,1.25\r\n\r\n-1,2\r\n");
  const auto recs = read_samples_csv(is);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].phase, -1.0);
  EXPECT_EQ(recs[1].value, 2.0);
}

TEST(SamplesCsv, ErrorsNameTheLine) {
  EXPECT_EQ(error_of(""), "line 1: missing header");
  EXPECT_NE(error_of("phi,x\n1,2\n").find("line 1: expected header"), std::string::npos);
  EXPECT_EQ(error_of("phase,x\n"), "line 2: no data rows");
  EXPECT_EQ(error_of("phase,x\n0.1,0.2\n0.3,abc\n"), "line 3: cannot parse 'abc' as a number");
  EXPECT_EQ(error_of("phase,x\n0.1,0.2,0.3\n"), "line 2: expected 2 fields, found 3");
  EXPECT_EQ(error_of("phase,x\n0.1,\n"), "line 2: empty field");
  EXPECT_EQ(error_of("phase,x\n1e999,0\n"), "line 2: cannot parse '1e999' as a number");
}

TEST(VarianceCsv, RoundTripIncludingNan) {
  std::vector<QuadratureRecord> recs = {{-3.0, 1.0}, {-3.0, 2.0}, {0.2, 1.0}, {0.3, -1.0}};
  const auto rep = binned_variance(recs, 4, SourceModel{Vacuum{}});
  std::ostringstream os;
  write_variance_csv(os, rep);
  std::istringstream is(os.str());
  const auto back = read_variance_csv(is);
  ASSERT_EQ(back.num_bins(), 4u);
  EXPECT_EQ(back.shift, 1u);
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_EQ(back.counts[b], rep.counts[b]);
    EXPECT_EQ(back.bin_centers[b], rep.bin_centers[b]);
    const auto same = [](double a, double c) { return (std::isnan(a) && std::isnan(c)) || a == c; };
    EXPECT_TRUE(same(back.estimated_variance[b], rep.estimated_variance[b]));
    EXPECT_TRUE(same(back.variance_product[b], rep.variance_product[b]));
    EXPECT_TRUE(same(back.normally_ordered_variance[b], rep.normally_ordered_variance[b]));
  }
  std::istringstream bad(
      "phi,count,var_est,var_theory,var_shifted,product,normally_ordered\n0,1.5,1,1,1,1,0\n");
  EXPECT_THROW(read_variance_csv(bad), MalformedInput);
}

TEST(WignerCsv, RoundTripRecoversGrid) {
  PhaseSpaceGrid grid{-3.0, 2.0, -1.0, 4.0, 6, 4};
  const auto field = wigner_gaussian(apply(squeeze_gate(0.3, 0.2, 0, 1), vacuum_state<double>(1)), grid);
  std::ostringstream os;
  write_wigner_csv(os, field);
  std::istringstream is(os.str());
  const auto back = read_wigner_csv(is);
  EXPECT_EQ(back.grid.nx, 6u);
  EXPECT_EQ(back.grid.np, 4u);
  EXPECT_EQ(back.grid.x_min, -3.0);
  EXPECT_EQ(back.grid.p_max, 4.0);
  EXPECT_EQ(back.values, field.values);
  std::istringstream ragged("x,p,w\n0,0,1\n0,1,1\n1,0,1\n");
  EXPECT_THROW(read_wigner_csv(ragged), MalformedInput);
}

TEST(DumpJson, FloatsAndLayout) {
  nlohmann::ordered_json j;
  j["a"] = 0.1;
  j["b"] = 2.0;
  j["c"] = std::numeric_limits<double>::quiet_NaN();
  j["d"] = {1.0, 2.5};
  j["e"] = nlohmann::ordered_json::array({{1, 2}, {3, 4}});
  j["f"] = "text";
  j["g"] = 3;
  EXPECT_EQ(dump_json(j, -1),
            "{\"a\":0.10000000000000001,\"b\":2.0,\"c\":null,\"d\":[1.0, 2.5],"
            "\"e\":[[1, 2],[3, 4]],\"f\":\"text\",\"g\":3}");
  const std::string pretty = dump_json(j);
  EXPECT_NE(pretty.find("\n  \"d\": [1.0, 2.5]"), std::string::npos);
  EXPECT_NE(pretty.find("\n    [1, 2],\n"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(pretty)["a"].get<double>(), 0.1);
}

TEST(TextFiles, RoundTripAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "cvsim_io_test.txt";
  write_text_file(path, "hello\nworld");
  EXPECT_EQ(read_text_file(path), "hello\nworld");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), std::runtime_error);
  EXPECT_THROW(write_text_file("/nonexistent_dir_cvsim/x.txt", ""), std::runtime_error);
}

}  // namespace
}  // namespace cvsim
