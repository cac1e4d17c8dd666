// Copyright 2026 The gf2crit Authors.
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

#ifndef GF2CRIT_POINTSET_IO_H_
#define GF2CRIT_POINTSET_IO_H_

#include <string>
#include <string_view>

#include "gf2crit/point_set.h"

namespace gf2crit {

// Text format:
//
//   # optional comment lines
//   dim 3
//   100
//   011
//
// Blank lines are ignored; '#' starts a comment line. Each body line has
// exactly n characters over {0,1}, leftmost is coordinate 1. Zero and
// duplicate lines are rejected. Errors are ParseError with 1-based line
// numbers.
PointSet parse_pointset(std::string_view text);

// Canonical rendering: header, then points in ascending mask order.
std::string render_pointset(const PointSet& x);

// File helpers. An unreadable path raises Error(kParse), an unwritable one
// Error(kInvalidArgument).
PointSet read_pointset_file(const std::string& path);
void write_pointset_file(const std::string& path, const PointSet& x);

}  // namespace gf2crit

#endif  // GF2CRIT_POINTSET_IO_H_
