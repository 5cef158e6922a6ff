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

#include <string>

#include "poi/instance.hpp"

namespace poi {

// Parses the JSON instance format (see README). Throws ParseError with a
// field diagnostic on schema or invariant violations.
PoiInstance parse_instance(const std::string& text);

PoiInstance load_instance(const std::string& path);

// Canonical form: elements sorted by id, keys sorted, 2-space indent,
// trailing newline. parse(write(x)) is structurally equal to x and
// write(parse(write(x))) is byte-identical to write(x).
std::string write_instance(const PoiInstance& inst);

void save_instance(const PoiInstance& inst, const std::string& path);

}  // namespace poi
