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

#ifndef CVSIM_ERRORS_HPP
#define CVSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvsim {

// Bad shapes, out-of-range indices, parameters outside their domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs that are well-formed but violate a structural requirement
// (asymmetric covariance, wrong ordering tag).
class MalformedInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Singular or non-positive-definite matrices where a definite one is needed.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An s-ordered quasiprobability requested beyond the state's regular range.
class UnsupportedOrdering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root bracketing, quadrature or other numerical failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvsim

#endif  // CVSIM_ERRORS_HPP
