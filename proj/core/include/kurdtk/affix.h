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

#ifndef KURDTK_AFFIX_H_
#define KURDTK_AFFIX_H_

#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kurdtk/label.h"
#include "kurdtk/tokenize.h"

namespace kurdtk {

enum class AffixPosition { kPrefix, kSuffix };

struct AffixEntry {
  LanguageCode variety;  // kmr, ckb, sdh or lki
  std::string category;  // DEF, INDF, PL, PROG, ...
  std::string affix;     // no hyphen
  AffixPosition position;
};

class AffixInventory {
 public:
  explicit AffixInventory(std::vector<AffixEntry> entries);

  // `variety TAB category TAB affix TAB prefix|suffix`, `#` comments.
  // Throws InvalidTable.
  static AffixInventory parse(std::istream& in);
  static AffixInventory load(const std::string& path);

  const std::vector<AffixEntry>& entries() const { return entries_; }

 private:
  std::vector<AffixEntry> entries_;
};

// For every word token (lowercased) and every variety, adds one for the
// longest matching prefix and one for the longest matching suffix of that
// variety. An affix only matches when it is strictly shorter than the
// token. Every inventory variety appears in the result.
std::map<LanguageCode, std::uint64_t> variety_cues(
    std::span<const Token> tokens, const AffixInventory& inventory);

}  // namespace kurdtk

#endif  // KURDTK_AFFIX_H_
