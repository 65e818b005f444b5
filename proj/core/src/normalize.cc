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

#include "kurdtk/normalize.h"

#include <algorithm>
#include <fstream>

#include "kurdtk/error.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"
#include "text_table.h"

namespace kurdtk {

std::string_view to_string(TableMode mode) {
  switch (mode) {
    case TableMode::kEncodingUnification: return "encoding-unification";
    case TableMode::kKurdishHarmonization: return "kurdish-harmonization";
  }
  return "?";
}

TableMode parse_table_mode(std::string_view text) {
  if (text == "encoding-unification") return TableMode::kEncodingUnification;
  if (text == "kurdish-harmonization") return TableMode::kKurdishHarmonization;
  throw ParseError("unknown table mode '" + std::string(text) + "'");
}

NormalizationTable::NormalizationTable(TableMode mode,
                                       std::vector<Mapping> mappings)
    : mode_(mode), mappings_(std::move(mappings)) {
  for (std::size_t i = 0; i < mappings_.size(); ++i) {
    const Mapping& m = mappings_[i];
    if (m.source.empty()) {
      throw InvalidTable("mapping " + std::to_string(i + 1) +
                         " has an empty source");
    }
    by_first_[m.source.front()].push_back(i);
  }
  for (std::size_t i = 0; i < mappings_.size(); ++i) {
    const std::u32string& a = mappings_[i].source;
    for (std::size_t j : by_first_[a.front()]) {
      if (j == i) continue;
      const std::u32string& b = mappings_[j].source;
      if (b.size() >= a.size() && b.compare(0, a.size(), a) == 0) {
        throw InvalidTable("source " + detail::hex_sequence(a) +
                           " is a prefix of source " +
                           detail::hex_sequence(b));
      }
    }
    for (const Mapping& m : mappings_) {
      if (m.target.find(a) != std::u32string::npos) {
        throw InvalidTable("target " + detail::hex_sequence(m.target) +
                           " contains source " + detail::hex_sequence(a));
      }
    }
  }
}

NormalizationTable NormalizationTable::parse(std::istream& in,
                                             TableMode fallback) {
  TableMode mode = fallback;
  std::vector<Mapping> mappings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (detail::trim(view).empty()) continue;
    if (view.front() == '#') {
      std::string_view body = detail::trim(view.substr(1));
      if (body.starts_with("mode:")) {
        mode = parse_table_mode(detail::trim(body.substr(5)));
      }
      continue;
    }
    const auto fields = detail::split(view, '\t');
    if (fields.size() < 2) {
      throw InvalidTable("line " + std::to_string(line_no) +
                         ": expected source TAB target TAB comment");
    }
    Mapping m;
    if (!detail::parse_hex_sequence(fields[0], m.source) ||
        !detail::parse_hex_sequence(fields[1], m.target)) {
      throw InvalidTable("line " + std::to_string(line_no) +
                         ": malformed hex codepoint");
    }
    if (fields.size() > 2) m.comment = std::string(detail::trim(fields[2]));
    mappings.push_back(std::move(m));
  }
  return NormalizationTable(mode, std::move(mappings));
}

NormalizationTable NormalizationTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open normalization table " + path);
  try {
    return parse(in);
  } catch (const InvalidTable& e) {
    throw InvalidTable(path + ": " + e.what());
  }
}

long NormalizationTable::match(std::u32string_view text,
                               std::size_t pos) const {
  auto it = by_first_.find(text[pos]);
  if (it == by_first_.end()) return -1;
  for (std::size_t i : it->second) {
    const std::u32string& src = mappings_[i].source;
    if (text.substr(pos, src.size()) == src) return static_cast<long>(i);
  }
  return -1;
}

std::string unify_encoding(std::string_view text,
                           const NormalizationTable& table) {
  const std::u32string in = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < in.size()) {
    const long m = table.match(in, pos);
    if (m < 0) {
      utf8::append(out, in[pos++]);
      continue;
    }
    const Mapping& mapping = table.mappings()[static_cast<std::size_t>(m)];
    for (char32_t cp : mapping.target) utf8::append(out, cp);
    pos += mapping.source.size();
  }
  return out;
}

std::string_view to_string(DigitPolicy policy) {
  switch (policy) {
    case DigitPolicy::kKeep: return "keep";
    case DigitPolicy::kFoldToAscii: return "fold-to-ascii";
    case DigitPolicy::kDrop: return "drop";
  }
  return "?";
}

DigitPolicy parse_digit_policy(std::string_view text) {
  if (text == "keep") return DigitPolicy::kKeep;
  if (text == "fold-to-ascii") return DigitPolicy::kFoldToAscii;
  if (text == "drop") return DigitPolicy::kDrop;
  throw ParseError("unknown digit policy '" + std::string(text) + "'");
}

bool CleaningPolicy::any_active() const {
  return strip_emails || strip_urls || collapse_whitespace || zwnj_to_space ||
         digit_policy != DigitPolicy::kKeep;
}

namespace {

bool ascii_alnum(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool email_local(char32_t c) {
  return ascii_alnum(c) || c == '.' || c == '_' || c == '%' || c == '+' ||
         c == '-';
}

bool starts_with_ci(std::u32string_view text, std::size_t pos,
                    std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char32_t c = text[pos + i];
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    if (c != static_cast<char32_t>(prefix[i])) return false;
  }
  return true;
}

bool url_trailer(char32_t c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
         c == '?' || c == ')' || c == ']' || c == '}' || c == '\'' ||
         c == '"' || c == 0x060C || c == 0x061F || c == 0x061B;
}

// End of a URL starting at pos, or pos when there is none.
std::size_t match_url(std::u32string_view text, std::size_t pos) {
  if (pos > 0 && ascii_alnum(text[pos - 1])) return pos;
  std::size_t prefix = 0;
  if (starts_with_ci(text, pos, "https://")) prefix = 8;
  else if (starts_with_ci(text, pos, "http://")) prefix = 7;
  else if (starts_with_ci(text, pos, "www.")) prefix = 4;
  if (prefix == 0) return pos;
  std::size_t end = pos + prefix;
  while (end < text.size() && !unicode::is_whitespace(text[end])) ++end;
  while (end > pos + prefix && url_trailer(text[end - 1])) --end;
  return end == pos + prefix ? pos : end;
}

// End of an e-mail address starting at pos, or pos when there is none.
std::size_t match_email(std::u32string_view text, std::size_t pos) {
  if (!email_local(text[pos]) || text[pos] == '.') return pos;
  if (pos > 0 && email_local(text[pos - 1])) return pos;
  std::size_t at = pos;
  while (at < text.size() && email_local(text[at])) ++at;
  if (at == text.size() || text[at] != '@') return pos;
  std::size_t end = at + 1;
  std::size_t labels = 0;
  for (;;) {
    const std::size_t start = end;
    while (end < text.size() && (ascii_alnum(text[end]) || text[end] == '-'))
      ++end;
    if (end == start) {
      end = start - 1;  // back off the dangling dot
      break;
    }
    ++labels;
    if (end + 1 < text.size() && text[end] == '.' &&
        (ascii_alnum(text[end + 1]) || text[end + 1] == '-')) {
      ++end;
      continue;
    }
    break;
  }
  return labels >= 2 ? end : pos;
}

bool arabic_indic_digit(char32_t c) {
  return (c >= 0x0660 && c <= 0x0669) || (c >= 0x06F0 && c <= 0x06F9);
}

}  // namespace

CleanResult clean(std::string_view text, const CleaningPolicy& policy) {
  if (!policy.any_active()) {
    throw InvalidArgument("cleaning policy has no active option");
  }
  const std::u32string in = utf8::decode(text);
  CleanResult result;
  std::u32string out;
  out.reserve(in.size());
  std::size_t pos = 0;
  while (pos < in.size()) {
    std::size_t end = pos;
    if (policy.strip_urls) end = match_url(in, pos);
    if (end == pos && policy.strip_emails) end = match_email(in, pos);
    if (end != pos) {
      ++result.redactions;
      const bool space_before = out.empty() || out.back() == U' ';
      const bool space_after =
          end == in.size() || unicode::is_whitespace(in[end]);
      if (space_before && space_after) {
        if (!out.empty()) out.pop_back();
        else if (end < in.size() && in[end] == U' ') ++end;
      }
      pos = end;
      continue;
    }
    char32_t c = in[pos++];
    if (policy.digit_policy == DigitPolicy::kFoldToAscii &&
        arabic_indic_digit(c)) {
      c = U'0' + (c & 0xF);
    } else if (policy.digit_policy == DigitPolicy::kDrop &&
               unicode::is_decimal_digit(c)) {
      continue;
    }
    if (policy.zwnj_to_space && c == unicode::kZwnj) c = U' ';
    out.push_back(c);
  }
  if (policy.collapse_whitespace) {
    std::u32string collapsed;
    collapsed.reserve(out.size());
    bool pending = false;
    for (char32_t c : out) {
      if (unicode::is_whitespace(c)) {
        pending = !collapsed.empty();
        continue;
      }
      if (pending) collapsed.push_back(U' ');
      pending = false;
      collapsed.push_back(c);
    }
    out.swap(collapsed);
  }
  result.text = utf8::encode(out);
  return result;
}

std::string_view to_string(CodeSwitchReason reason) {
  switch (reason) {
    case CodeSwitchReason::kNone: return "none";
    case CodeSwitchReason::kArabicExclusiveLetters:
      return "arabic-exclusive-letters";
  }
  return "?";
}

CodeSwitchFlag flag_code_switch(std::string_view sentence, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("code-switch threshold must lie in (0, 1]");
  }
  static constexpr std::u32string_view kExclusive = U"ةثذ"
                                                    U"صضط"
                                                    U"ظء";
  static constexpr std::u32string_view kKurdish = U"ڵڕێ"
                                                  U"ۆەپ"
                                                  U"چژگ"
                                                  U"ڤ";
  std::size_t arabic = 0;
  std::size_t exclusive = 0;
  bool kurdish = false;
  for (char32_t c : utf8::decode(sentence)) {
    if (!unicode::is_arabic_block_letter(c)) continue;
    ++arabic;
    if (kExclusive.find(c) != std::u32string_view::npos) ++exclusive;
    if (kKurdish.find(c) != std::u32string_view::npos) kurdish = true;
  }
  CodeSwitchFlag flag;
  if (arabic > 0) {
    flag.score = static_cast<double>(exclusive) / static_cast<double>(arabic);
  }
  if (flag.score >= threshold && !kurdish) {
    flag.flagged = true;
    flag.reason = CodeSwitchReason::kArabicExclusiveLetters;
  }
  return flag;
}

}  // namespace kurdtk
