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

#include "gf2crit/pointset_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "gf2crit/errors.h"

namespace gf2crit {
namespace {

std::string_view trim(std::string_view s) {
  const auto space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_header(std::string_view line, int line_no) {
  if (line.substr(0, 3) != "dim") {
    throw ParseError(ParseErrorKind::kBadHeader, line_no,
                     "expected 'dim <n>', got '" + std::string(line) + "'");
  }
  const std::string_view rest = trim(line.substr(3));
  if (rest.empty() || line.size() == 3 || (line[3] != ' ' && line[3] != '\t')) {
    throw ParseError(ParseErrorKind::kBadHeader, line_no,
                     "expected 'dim <n>', got '" + std::string(line) + "'");
  }
  int n = -1;
  const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || end != rest.data() + rest.size() || n < 0) {
    throw ParseError(ParseErrorKind::kBadHeader, line_no,
                     "dimension is not a nonnegative integer: '" +
                         std::string(rest) + "'");
  }
  if (n > kMaxDim) {
    throw ParseError(ParseErrorKind::kBadHeader, line_no,
                     "dimension " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxDim));
  }
  return n;
}

}  // namespace

PointSet parse_pointset(std::string_view text) {
  int dim = -1;
  int line_no = 0;
  std::vector<Mask> points;
  std::unordered_set<Mask> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view line = trim(text.substr(pos, next - pos));
    pos = next + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (dim < 0) {
      dim = parse_header(line, line_no);
      continue;
    }
    if (static_cast<int>(line.size()) != dim) {
      throw ParseError(ParseErrorKind::kBadLineLength, line_no,
                       "expected " + std::to_string(dim) + " characters, got " +
                           std::to_string(line.size()));
    }
    Mask bits = 0;
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw ParseError(ParseErrorKind::kBadCharacter, line_no,
                         std::string("unexpected character '") + ch + "'");
      }
      bits = (bits << 1) | static_cast<Mask>(ch == '1');
    }
    if (bits == 0) {
      throw ParseError(ParseErrorKind::kZeroVector, line_no,
                       "the zero vector is not a point");
    }
    if (!seen.insert(bits).second) {
      throw ParseError(ParseErrorKind::kDuplicateVector, line_no,
                       "duplicate vector " + std::string(line));
    }
    points.push_back(bits);
  }
  if (dim < 0) {
    throw ParseError(ParseErrorKind::kBadHeader, line_no + 1,
                     "missing 'dim <n>' header");
  }
  return PointSet(dim, std::move(points));
}

std::string render_pointset(const PointSet& x) {
  std::string out = "dim " + std::to_string(x.dim()) + "\n";
  for (Mask p : x.points()) {
    out += to_bit_string(p, x.dim());
    out += '\n';
  }
  return out;
}

PointSet read_pointset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pointset(buffer.str());
}

void write_pointset_file(const std::string& path, const PointSet& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  out << render_pointset(x);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "write to '" + path + "' failed");
  }
}

}  // namespace gf2crit
