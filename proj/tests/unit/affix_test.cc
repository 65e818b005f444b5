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

#include <gtest/gtest.h>

#include <sstream>

#include "kurdtk/affix.h"
#include "kurdtk/data_paths.h"
#include "kurdtk/error.h"

namespace kurdtk {
namespace {

AffixInventory small() {
  std::istringstream in(
      "# variety\tcategory\taffix\tposition\n"
      "kmr\tPL\tin\tsuffix\n"
      "sdh\tINF\tin\tsuffix\n"
      "sdh\tPL\teyl\tsuffix\n"
      "ckb\tDEF\teke\tsuffix\n"
      "kmr\tPROG\tdi\tprefix\n"
      "ckb\tPROG\tde\tprefix\n");
  return AffixInventory::parse(in);
}

TEST(AffixTest, HandAppliedInventoryPass) {
  const std::vector<Token> tokens = {
      {"witin", TokenKind::kWord},   {"diçim", TokenKind::kWord},
      {"kiteweke", TokenKind::kWord}, {"in", TokenKind::kWord},
      {"Dexom", TokenKind::kWord},   {".", TokenKind::kPunctuation},
      {"dareyl", TokenKind::kWord},  {"diçin", TokenKind::kWord},
      {"1990", TokenKind::kDigit},   {"av", TokenKind::kWord}};
  const auto cues = variety_cues(tokens, small());
  const std::map<LanguageCode, std::uint64_t> expected = {
      {LanguageCode::kmr, 4}, {LanguageCode::ckb, 2}, {LanguageCode::sdh, 3}};
  EXPECT_EQ(cues, expected);
}

TEST(AffixTest, EmptyTokensGiveZeros) {
  const auto cues = variety_cues({}, small());
  ASSERT_EQ(cues.size(), 3u);
  for (const auto& [v, n] : cues) EXPECT_EQ(n, 0u);
}

TEST(AffixTest, ShippedInventoryHasSouthernInfinitive) {
  const auto inv = AffixInventory::load(data_file("affixes.tsv"));
  const std::vector<Token> tokens = {{"witin", TokenKind::kWord}};
  EXPECT_GE(variety_cues(tokens, inv).at(LanguageCode::sdh), 1u);
  EXPECT_EQ(variety_cues(tokens, inv).size(), 4u);
}

TEST(AffixTest, ParseErrors) {
  std::istringstream hyphen("kmr\tPL\t-in\tsuffix\n");
  EXPECT_THROW(AffixInventory::parse(hyphen), InvalidTable);
  std::istringstream variety("tr\tPL\tler\tsuffix\n");
  EXPECT_THROW(AffixInventory::parse(variety), InvalidTable);
  std::istringstream position("kmr\tPL\tin\tinfix\n");
  EXPECT_THROW(AffixInventory::parse(position), InvalidTable);
}

}  // namespace
}  // namespace kurdtk
