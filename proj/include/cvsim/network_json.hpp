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

#ifndef CVSIM_NETWORK_JSON_HPP
#define CVSIM_NETWORK_JSON_HPP

// JSON form of NetworkSpec and of network results.
//
//   {"modes": 4, "hbar": 2.0,
//    "gates": [{"kind": "squeeze", "modes": [0], "params": {"r": 0.5, "theta": 0.0}}, ...],
//    "analyses": [{"type": "log_negativity", "part_a": [0], "part_b": [3]}, ...]}

#include <filesystem>
#include <json.hpp>
#include <string>

#include "cvsim/errors.hpp"
#include "cvsim/network.hpp"

namespace cvsim {

/// Schema violation located by a JSON pointer such as "/gates/1/params/r".
class SchemaError : public InvalidArgument {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : InvalidArgument((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Parses and validates. Any problem, including value-range failures, is
/// reported as a SchemaError.
NetworkSpec parse_network_spec(const nlohmann::json& doc);
NetworkSpec parse_network_spec(const std::string& text);
NetworkSpec load_network_spec(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const NetworkSpec& spec);

/// Final mean and covariance plus one entry per analysis. Matrix entries
/// with magnitude below `display_threshold` print as 0.
nlohmann::ordered_json to_json(const NetworkSpec& spec, const NetworkResult<double>& result,
                               double display_threshold = kDisplayThreshold);

}  // namespace cvsim

#endif  // CVSIM_NETWORK_JSON_HPP
