// Copyright 2026 The hyperlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hyperlp {

/// Raised for malformed input data or arguments that violate an operation's
/// preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid configuration or command-line usage (unknown key, bad option
/// value, missing required setting).
class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Raised when a well-formed request cannot be satisfied by the data
/// (e.g. a split that would leave no test links).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlp
