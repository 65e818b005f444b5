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

#include "kurdtk/data_paths.h"
#include "kurdtk/error.h"
#include "kurdtk/translit.h"

namespace kurdtk {
namespace {

class TranslitTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    to_latin_ = new RuleTable(RuleTable::load(data_file("translit/arab-latn.tsv")));
    to_arab_ = new RuleTable(RuleTable::load(data_file("translit/latn-arab.tsv")));
  }
  static void TearDownTestSuite() {
    delete to_latin_;
    delete to_arab_;
  }
  static RuleTable* to_latin_;
  static RuleTable* to_arab_;
};

RuleTable* TranslitTest::to_latin_ = nullptr;
RuleTable* TranslitTest::to_arab_ = nullptr;

TEST_F(TranslitTest, AnchoredPairs) {
  EXPECT_EQ(arab_to_latin("له", *to_latin_), "le");
  EXPECT_EQ(arab_to_latin("و", *to_latin_), "û");
  EXPECT_EQ(arab_to_latin("من و تۆ", *to_latin_), "mn û to");
  EXPECT_EQ(latin_to_arab("şeqam", *to_arab_), "شه‌قام");
}

TEST_F(TranslitTest, ArabToLatinHandOracle) {
  EXPECT_EQ(arab_to_latin("شه‌قام", *to_latin_), "şeqam");
  EXPECT_EQ(arab_to_latin("لە ماڵەوە", *to_latin_), "le mallewe");
  EXPECT_EQ(arab_to_latin("کوردستان", *to_latin_), "kurdstan");
  EXPECT_EQ(arab_to_latin("ئێمە", *to_latin_), "ême");
  EXPECT_EQ(arab_to_latin("یەک", *to_latin_), "yek");
  EXPECT_EQ(arab_to_latin("ڕۆژ", *to_latin_), "rroj");
  EXPECT_EQ(arab_to_latin("خوێندن", *to_latin_), "xwêndn");
  EXPECT_EQ(arab_to_latin("٢٠١٩؟", *to_latin_), "2019?");
}

TEST_F(TranslitTest, LatinToArabHandOracle) {
  EXPECT_EQ(latin_to_arab("rroj", *to_arab_), "ڕۆژ");
  EXPECT_EQ(latin_to_arab("ême", *to_arab_), "ئێمه");
  EXPECT_EQ(latin_to_arab("av", *to_arab_), "ئاڤ");
  EXPECT_EQ(latin_to_arab("ser", *to_arab_), "سه‌ر");
  EXPECT_EQ(latin_to_arab("baş e", *to_arab_), "باش ئه");
}

TEST_F(TranslitTest, DetectionStaysOffArabicAfterTransliteration) {
  for (const char* s : {"ئەمڕۆ باران بە خوڕ بارى.", "من دەچم بۆ بازاڕ",
                        "هەولێر پایتەختی هەرێمی کوردستانە"}) {
    ASSERT_EQ(detect_script(s).first, ScriptCode::arab);
    const ScriptCode after = detect_script(arab_to_latin(s, *to_latin_)).first;
    EXPECT_TRUE(after == ScriptCode::latn || after == ScriptCode::unknown) << s;
  }
}

TEST(RuleTableTest, LongestMatchThenFileOrderAndContexts) {
  std::istringstream in(
      "0061\t0078\tany\tany\ta\n"
      "0061 0062\t0079\tany\tany\tab\n"
      "0063\t0031\tboundary\tany\tinitial c\n"
      "0063\t0032\tany\tany\tc\n"
      "0064\t0033\tvowel-letter\tany\td after vowel\n");
  const RuleTable t = RuleTable::parse(in);
  EXPECT_EQ(apply_rules("abac", t), "yx2");
  EXPECT_EQ(apply_rules("c c", t), "1 1");
  // Left context is the emitted text: a became x, o was copied.
  EXPECT_EQ(apply_rules("ad od", t), "xd o3");
  EXPECT_EQ(apply_rules("kd", t), "kd");
  ASSERT_NE(t.candidates(U'a'), nullptr);
  EXPECT_EQ(t.candidates(U'a')->front(), 1u);
  EXPECT_EQ(t.candidates(U'z'), nullptr);
}

TEST(RuleTableTest, ParseErrors) {
  std::istringstream cls("0061\t0062\tsomewhere\tany\tx\n");
  EXPECT_THROW(RuleTable::parse(cls), InvalidTable);
  std::istringstream empty_source("\t0062\tany\tany\tx\n");
  EXPECT_THROW(RuleTable::parse(empty_source), InvalidTable);
}

TEST(DetectScriptTest, Classes) {
  EXPECT_EQ(detect_script("ئەم کتێبە باشە").first, ScriptCode::arab);
  EXPECT_EQ(detect_script("این کتاب خوب است").first, ScriptCode::arab_fa);
  EXPECT_EQ(detect_script("Ev pirtûk baş e").first, ScriptCode::latn);
  EXPECT_EQ(detect_script("Na kıtab zaf weş o").first, ScriptCode::latn_wiki);
  EXPECT_EQ(detect_script("123 !?").first, ScriptCode::unknown);
  EXPECT_EQ(detect_script("").first, ScriptCode::unknown);
  EXPECT_EQ(detect_script("ab سب").first, ScriptCode::unknown);
  const ScriptProfile p = detect_script("ڕۆژ ab 1").second;
  EXPECT_EQ(p.arabic_letters, 3u);
  EXPECT_EQ(p.kurdish_distinctive, 2u);
  EXPECT_EQ(p.latin_letters, 2u);
  EXPECT_EQ(p.other, 1u);
}

}  // namespace
}  // namespace kurdtk
