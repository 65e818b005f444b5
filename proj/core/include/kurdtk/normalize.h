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

#ifndef KURDTK_NORMALIZE_H_
#define KURDTK_NORMALIZE_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kurdtk {

enum class TableMode { kEncodingUnification, kKurdishHarmonization };

std::string_view to_string(TableMode mode);
TableMode parse_table_mode(std::string_view text);  // throws ParseError

struct Mapping {
  std::u32string source;  // non-empty
  std::u32string target;  // may be empty (deletion)
  std::string comment;
};

// Ordered codepoint-sequence rewrite table. Construction validates that no
// source is a prefix of another (so at most one source matches at any
// position) and that no target contains a source (so a single pass is
// idempotent). Violations throw InvalidTable.
class NormalizationTable {
 public:
  NormalizationTable(TableMode mode, std::vector<Mapping> mappings);

  // Text format, UTF-8, one mapping per line:
  //   <source hex codepoints> TAB <target hex codepoints> TAB <comment>
  // Codepoints inside a field are space separated; an empty target deletes.
  // `#` starts a comment line. A `# mode: <name>` line sets the mode,
  // otherwise `fallback` is used.
  static NormalizationTable parse(std::istream& in,
                                  TableMode fallback =
                                      TableMode::kEncodingUnification);
  static NormalizationTable load(const std::string& path);

  TableMode mode() const { return mode_; }
  const std::vector<Mapping>& mappings() const { return mappings_; }

  // Index of the mapping whose source starts at text[pos], or -1.
  long match(std::u32string_view text, std::size_t pos) const;

 private:
  TableMode mode_;
  std::vector<Mapping> mappings_;
  std::unordered_map<char32_t, std::vector<std::size_t>> by_first_;
};

// Single left-to-right pass replacing each source occurrence by its target.
// Characters outside the table are copied. Input must be valid UTF-8.
std::string unify_encoding(std::string_view text,
                           const NormalizationTable& table);

enum class DigitPolicy { kKeep, kFoldToAscii, kDrop };

std::string_view to_string(DigitPolicy policy);
DigitPolicy parse_digit_policy(std::string_view text);  // throws ParseError

struct CleaningPolicy {
  bool strip_emails = true;
  bool strip_urls = true;
  bool collapse_whitespace = true;
  DigitPolicy digit_policy = DigitPolicy::kKeep;
  bool zwnj_to_space = false;

  bool any_active() const;
};

struct CleanResult {
  std::string text;
  std::size_t redactions = 0;
};

// Removes URLs and e-mail addresses (each counted once), then applies the
// digit policy, ZWNJ conversion and whitespace collapsing. Removing a match
// also drops one adjacent space so no double space is left behind.
// fold-to-ascii maps U+0660-0669 and U+06F0-06F9 to 0-9; drop removes every
// decimal digit. Collapsing turns each whitespace run into one U+0020 and
// trims both ends. Throws InvalidArgument when no option is active.
CleanResult clean(std::string_view text, const CleaningPolicy& policy);

enum class CodeSwitchReason { kNone, kArabicExclusiveLetters };

std::string_view to_string(CodeSwitchReason reason);

struct CodeSwitchFlag {
  bool flagged = false;
  CodeSwitchReason reason = CodeSwitchReason::kNone;
  double score = 0.0;
};

inline constexpr double kDefaultCodeSwitchThreshold = 0.05;

// score = |letters in {ة ث ذ ص ض ط ظ ء}| / |Arabic-block letters|;
// flagged when score >= threshold and no letter of {ڵ ڕ ێ ۆ ە پ چ ژ گ ڤ}
// occurs. Throws InvalidArgument unless 0 < threshold <= 1.
CodeSwitchFlag flag_code_switch(std::string_view sentence,
                                double threshold = kDefaultCodeSwitchThreshold);

}  // namespace kurdtk

#endif  // KURDTK_NORMALIZE_H_
