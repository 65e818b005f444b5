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

#ifndef KURDTK_UNICODE_H_
#define KURDTK_UNICODE_H_

#include <string>
#include <string_view>

// Thin wrappers over ICU character properties, so the rest of the library
// does not include ICU headers.
namespace kurdtk::unicode {

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

enum class CharClass {
  kWhitespace,
  kLetter,  // general category L*
  kMark,    // general category M*
  kDigit,   // general category Nd
  kJoiner,  // ZWNJ / ZWJ
  kOther,   // punctuation, symbols, everything else
};

CharClass classify(char32_t cp);

bool is_letter(char32_t cp);
bool is_decimal_digit(char32_t cp);
bool is_whitespace(char32_t cp);

// Letter whose Unicode script property is Latin.
bool is_latin_letter(char32_t cp);

// Letter inside U+0600-06FF, U+0750-077F or U+FB50-FEFF.
bool is_arabic_block_letter(char32_t cp);

char32_t to_lower(char32_t cp);

// Canonical composition (NFC) of valid UTF-8.
std::string nfc(std::string_view text);

}  // namespace kurdtk::unicode

#endif  // KURDTK_UNICODE_H_
