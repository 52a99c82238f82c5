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

#ifndef CVSIM_CLI_HPP
#define CVSIM_CLI_HPP

#include <iosfwd>

namespace cvsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `cvsim` command. Subcommands: sample, analyze,
/// network, fock-bs, wigner. Returns 0 on success, 1 on runtime or numerical
/// failure (including unreadable input data), 2 on usage or validation
/// failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvsim

#endif  // CVSIM_CLI_HPP
