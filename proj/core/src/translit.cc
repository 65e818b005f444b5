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

#include "kurdtk/translit.h"

#include <algorithm>
#include <fstream>

#include "kurdtk/error.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"
#include "text_table.h"

namespace kurdtk {

std::string_view to_string(ContextClass c) {
  switch (c) {
    case ContextClass::kAny: return "any";
    case ContextClass::kLetter: return "letter";
    case ContextClass::kVowelLetter: return "vowel-letter";
    case ContextClass::kBoundary: return "boundary";
  }
  return "?";
}

ContextClass parse_context_class(std::string_view text) {
  if (text == "any" || text.empty()) return ContextClass::kAny;
  if (text == "letter") return ContextClass::kLetter;
  if (text == "vowel-letter") return ContextClass::kVowelLetter;
  if (text == "boundary") return ContextClass::kBoundary;
  throw ParseError("unknown context class '" + std::string(text) + "'");
}

RuleTable::RuleTable(std::vector<TransliterationRule> rules)
    : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].source.empty()) {
      throw InvalidTable("rule " + std::to_string(i + 1) +
                         " has an empty source");
    }
    by_first_[rules_[i].source.front()].push_back(i);
  }
  for (auto& [first, ids] : by_first_) {
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return rules_[a].source.size() > rules_[b].source.size();
    });
  }
}

RuleTable RuleTable::parse(std::istream& in) {
  std::vector<TransliterationRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (detail::trim(view).empty() || view.front() == '#') continue;
    const auto fields = detail::split(view, '\t');
    const std::string where = "rule line " + std::to_string(line_no);
    if (fields.size() < 4) {
      throw InvalidTable(where + ": expected source, target, left, right");
    }
    TransliterationRule r;
    if (!detail::parse_hex_sequence(fields[0], r.source) ||
        !detail::parse_hex_sequence(fields[1], r.target)) {
      throw InvalidTable(where + ": malformed hex codepoint");
    }
    if (r.source.empty()) throw InvalidTable(where + ": empty source");
    try {
      r.left = parse_context_class(detail::trim(fields[2]));
      r.right = parse_context_class(detail::trim(fields[3]));
    } catch (const ParseError& e) {
      throw InvalidTable(where + ": " + e.what());
    }
    if (fields.size() > 4) r.comment = std::string(detail::trim(fields[4]));
    rules.push_back(std::move(r));
  }
  return RuleTable(std::move(rules));
}

RuleTable RuleTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rule table " + path);
  try {
    return parse(in);
  } catch (const InvalidTable& e) {
    throw InvalidTable(path + ": " + e.what());
  }
}

const std::vector<std::size_t>* RuleTable::candidates(char32_t first) const {
  auto it = by_first_.find(first);
  return it == by_first_.end() ? nullptr : &it->second;
}

bool is_vowel_letter(char32_t cp) {
  static constexpr std::u32string_view kVowels =
      U"aeêiîouûüAEÊIÎOUÛÜ"
      U"اەێۆویۊ";
  return kVowels.find(cp) != std::u32string_view::npos;
}

namespace {

bool joiner(char32_t c) { return c == unicode::kZwnj || c == unicode::kZwj; }

// `cp` == 0 stands for the text edge.
bool holds(ContextClass cls, char32_t cp) {
  switch (cls) {
    case ContextClass::kAny: return true;
    case ContextClass::kLetter: return cp != 0 && unicode::is_letter(cp);
    case ContextClass::kVowelLetter: return cp != 0 && is_vowel_letter(cp);
    case ContextClass::kBoundary: return cp == 0 || !unicode::is_letter(cp);
  }
  return false;
}

}  // namespace

std::string apply_rules(std::string_view text, const RuleTable& rules) {
  const std::u32string in = utf8::decode(text);
  std::u32string out;
  out.reserve(in.size() + in.size() / 4);
  std::size_t pos = 0;
  while (pos < in.size()) {
    char32_t left = 0;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (!joiner(*it)) {
        left = *it;
        break;
      }
    }
    const TransliterationRule* chosen = nullptr;
    if (const auto* ids = rules.candidates(in[pos])) {
      for (std::size_t id : *ids) {
        const TransliterationRule& r = rules.rules()[id];
        const std::size_t n = r.source.size();
        if (in.compare(pos, n, r.source) != 0) continue;
        std::size_t next = pos + n;
        while (next < in.size() && joiner(in[next])) ++next;
        const char32_t right = next < in.size() ? in[next] : 0;
        if (holds(r.left, left) && holds(r.right, right)) {
          chosen = &r;
          break;
        }
      }
    }
    if (chosen == nullptr) {
      out.push_back(in[pos++]);
      continue;
    }
    out += chosen->target;
    pos += chosen->source.size();
  }
  return utf8::encode(out);
}

std::string arab_to_latin(std::string_view text, const RuleTable& rules) {
  return apply_rules(text, rules);
}

std::string latin_to_arab(std::string_view text, const RuleTable& rules) {
  return apply_rules(text, rules);
}

std::pair<ScriptCode, ScriptProfile> detect_script(std::string_view text) {
  static constexpr std::u32string_view kKurdish =
      U"ڵڕێۆەۊ";
  static constexpr std::u32string_view kTurkish = U"ıİğĞ";
  ScriptProfile p;
  bool turkish = false;
  for (char32_t c : utf8::decode(text)) {
    if (unicode::is_arabic_block_letter(c)) {
      ++p.arabic_letters;
      if (kKurdish.find(c) != std::u32string_view::npos) ++p.kurdish_distinctive;
    } else if (unicode::is_latin_letter(c)) {
      ++p.latin_letters;
      if (kTurkish.find(c) != std::u32string_view::npos) turkish = true;
    } else if (!unicode::is_whitespace(c)) {
      ++p.other;
    }
  }
  ScriptCode code = ScriptCode::unknown;
  if (p.arabic_letters > p.latin_letters) {
    code = p.kurdish_distinctive > 0 ? ScriptCode::arab : ScriptCode::arab_fa;
  } else if (p.latin_letters > p.arabic_letters) {
    code = turkish ? ScriptCode::latn_wiki : ScriptCode::latn;
  }
  return {code, p};
}

}  // namespace kurdtk
