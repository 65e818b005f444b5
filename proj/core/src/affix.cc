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

#include "kurdtk/affix.h"

#include <fstream>

#include "kurdtk/error.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"
#include "text_table.h"

namespace kurdtk {

AffixInventory::AffixInventory(std::vector<AffixEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidTable("affix inventory is empty");
  for (const AffixEntry& e : entries_) {
    if (e.affix.empty() || !utf8::is_valid(e.affix)) {
      throw InvalidTable("affix entry with empty or invalid affix");
    }
    if (e.variety != LanguageCode::kmr && e.variety != LanguageCode::ckb &&
        e.variety != LanguageCode::sdh && e.variety != LanguageCode::lki) {
      throw InvalidTable("affix variety must be kmr, ckb, sdh or lki");
    }
  }
}

AffixInventory AffixInventory::parse(std::istream& in) {
  std::vector<AffixEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = detail::split(view, '\t');
    const std::string where = "affix line " + std::to_string(line_no);
    if (fields.size() != 4) throw InvalidTable(where + ": expected 4 fields");
    AffixEntry e;
    try {
      e.variety = parse_language(detail::trim(fields[0]));
    } catch (const ParseError& err) {
      throw InvalidTable(where + ": " + err.what());
    }
    e.category = std::string(detail::trim(fields[1]));
    e.affix = std::string(detail::trim(fields[2]));
    const std::string_view pos = detail::trim(fields[3]);
    if (pos == "prefix") e.position = AffixPosition::kPrefix;
    else if (pos == "suffix") e.position = AffixPosition::kSuffix;
    else throw InvalidTable(where + ": position must be prefix or suffix");
    if (e.affix.empty() || e.affix.find('-') != std::string::npos) {
      throw InvalidTable(where + ": affix must be non-empty, without '-'");
    }
    entries.push_back(std::move(e));
  }
  return AffixInventory(std::move(entries));
}

AffixInventory AffixInventory::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open affix inventory " + path);
  return parse(in);
}

std::map<LanguageCode, std::uint64_t> variety_cues(
    std::span<const Token> tokens, const AffixInventory& inventory) {
  std::map<LanguageCode, std::uint64_t> counts;
  for (const AffixEntry& e : inventory.entries()) counts[e.variety] = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::kWord) continue;
    std::u32string lower = utf8::decode(t.surface);
    for (char32_t& c : lower) c = unicode::to_lower(c);
    const std::string word = utf8::encode(lower);
    const std::size_t len = lower.size();
    for (auto& [variety, total] : counts) {
      std::size_t best_prefix = 0, best_suffix = 0;
      for (const AffixEntry& e : inventory.entries()) {
        if (e.variety != variety) continue;
        const std::size_t n = utf8::length(e.affix);
        if (n >= len) continue;
        if (e.position == AffixPosition::kPrefix && word.starts_with(e.affix))
          best_prefix = std::max(best_prefix, n);
        if (e.position == AffixPosition::kSuffix && word.ends_with(e.affix))
          best_suffix = std::max(best_suffix, n);
      }
      total += (best_prefix > 0) + (best_suffix > 0);
    }
  }
  return counts;
}

}  // namespace kurdtk
