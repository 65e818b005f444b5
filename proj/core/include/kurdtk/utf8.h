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

#ifndef KURDTK_UTF8_H_
#define KURDTK_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace kurdtk::utf8 {

// True when `bytes` is well-formed UTF-8 (no overlongs, no surrogates,
// nothing above U+10FFFF).
bool is_valid(std::string_view bytes);

// Decodes well-formed UTF-8. Throws kurdtk::ParseError otherwise.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

// Number of Unicode scalar values. Input must be valid UTF-8.
std::size_t length(std::string_view bytes);

}  // namespace kurdtk::utf8

#endif  // KURDTK_UTF8_H_
