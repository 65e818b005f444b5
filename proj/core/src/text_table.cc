// Copyright 2026 The kurdtk Authors.
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

#include "text_table.h"

#include <charconv>
#include <cstdint>
#include <cstdio>

namespace kurdtk::detail {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_hex_sequence(std::string_view field, std::u32string& out) {
  out.clear();
  for (std::string_view tok : split(trim(field), ' ')) {
    if (tok.empty()) continue;
    if (tok.starts_with("U+") || tok.starts_with("u+")) tok.remove_prefix(2);
    std::uint32_t cp = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), cp, 16);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    out.push_back(static_cast<char32_t>(cp));
  }
  return true;
}

std::string hex_sequence(std::u32string_view text) {
  std::string out;
  char buf[16];
  for (char32_t cp : text) {
    if (!out.empty()) out += ' ';
    std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
    out += buf;
  }
  return out;
}

}  // namespace kurdtk::detail
