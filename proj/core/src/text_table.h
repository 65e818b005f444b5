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

#ifndef KURDTK_SRC_TEXT_TABLE_H_
#define KURDTK_SRC_TEXT_TABLE_H_

#include <string>
#include <string_view>
#include <vector>

// Helpers shared by the tab-separated data file parsers.
namespace kurdtk::detail {

std::vector<std::string_view> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

// "0647 200C" -> U+0647 U+200C. Empty input gives an empty string.
// Returns false on a malformed field.
bool parse_hex_sequence(std::string_view field, std::u32string& out);

std::string hex_sequence(std::u32string_view text);

}  // namespace kurdtk::detail

#endif  // KURDTK_SRC_TEXT_TABLE_H_
