// Copyright 2026 The Authors.
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

namespace poi {

// Malformed instance text or invalid generator/CLI parameters.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Unknown element/set id.
class LookupError : public std::runtime_error {
 public:
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

// Strategy or rule applied to an instance it does not support.
class MismatchError : public std::runtime_error {
 public:
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration would exceed the configured state budget.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace poi
