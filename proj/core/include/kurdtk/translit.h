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

#ifndef KURDTK_TRANSLIT_H_
#define KURDTK_TRANSLIT_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kurdtk/label.h"

namespace kurdtk {

// letter: any letter; vowel-letter: a vowel letter of either script
// (a e ê i î o u û ü and uppercase, ا ە ێ ۆ و ی ۊ); boundary: no letter
// (text edge, space, punctuation, digit); any: always true.
enum class ContextClass { kAny, kLetter, kVowelLetter, kBoundary };

std::string_view to_string(ContextClass c);
ContextClass parse_context_class(std::string_view text);  // throws ParseError

struct TransliterationRule {
  std::u32string source;  // non-empty
  std::u32string target;  // may be empty
  ContextClass left = ContextClass::kAny;
  ContextClass right = ContextClass::kAny;
  std::string comment;
};

class RuleTable {
 public:
  explicit RuleTable(std::vector<TransliterationRule> rules);

  // `source-hex TAB target-hex TAB left-class TAB right-class TAB comment`,
  // `#` comments. Throws InvalidTable.
  static RuleTable parse(std::istream& in);
  static RuleTable load(const std::string& path);

  const std::vector<TransliterationRule>& rules() const { return rules_; }

  // Rule indices grouped by first source codepoint, longest source first,
  // file order among equal lengths.
  const std::vector<std::size_t>* candidates(char32_t first) const;

 private:
  std::vector<TransliterationRule> rules_;
  std::unordered_map<char32_t, std::vector<std::size_t>> by_first_;
};

bool is_vowel_letter(char32_t cp);

// One left-to-right pass. At each position the longest source whose
// context holds wins; ties go to the earlier rule. The left context is the
// last emitted codepoint and the right context the next input codepoint
// after the match, both skipping ZWNJ/ZWJ. Unmatched codepoints are
// copied. Input must be valid UTF-8.
std::string apply_rules(std::string_view text, const RuleTable& rules);

// The same pass in each direction; the rule table decides the mapping.
std::string arab_to_latin(std::string_view text, const RuleTable& rules);
std::string latin_to_arab(std::string_view text, const RuleTable& rules);

struct ScriptProfile {
  std::size_t arabic_letters = 0;
  std::size_t latin_letters = 0;
  std::size_t kurdish_distinctive = 0;  // ڵ ڕ ێ ۆ ە ۊ
  std::size_t other = 0;  // other non-space codepoints

  friend bool operator==(const ScriptProfile&, const ScriptProfile&) = default;
};

// Majority vote of Arabic-block letters against Latin-script letters;
// ties and letterless text give unknown. Arabic-majority text is arab when
// a Kurdish-distinctive letter occurs, otherwise arab-fa. Latin-majority
// text is latn-wiki when it contains ı İ ğ Ğ, otherwise latn.
std::pair<ScriptCode, ScriptProfile> detect_script(std::string_view text);

}  // namespace kurdtk

#endif  // KURDTK_TRANSLIT_H_
