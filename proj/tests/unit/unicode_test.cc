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

#include "kurdtk/error.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"

namespace kurdtk {
namespace {

TEST(Utf8Test, RoundTripsAcrossPlanes) {
  const std::u32string text = U"açە‌\U0001F600";
  const std::string bytes = utf8::encode(text);
  EXPECT_EQ(bytes.size(), 1u + 2u + 2u + 3u + 4u);
  EXPECT_TRUE(utf8::is_valid(bytes));
  EXPECT_EQ(utf8::decode(bytes), text);
  EXPECT_EQ(utf8::length(bytes), 5u);
}

TEST(Utf8Test, RejectsMalformedSequences) {
  EXPECT_FALSE(utf8::is_valid("\xc0\xaf"));          // overlong '/'
  EXPECT_FALSE(utf8::is_valid("\xed\xa0\x80"));      // surrogate
  EXPECT_FALSE(utf8::is_valid("\xf4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_FALSE(utf8::is_valid("\xe2\x82"));          // truncated
  EXPECT_FALSE(utf8::is_valid("\x80"));
  EXPECT_THROW(utf8::decode("ab\xff"), ParseError);
}

TEST(UnicodeTest, Classify) {
  using unicode::CharClass;
  EXPECT_EQ(unicode::classify(U'a'), CharClass::kLetter);
  EXPECT_EQ(unicode::classify(U'ڵ'), CharClass::kLetter);  // ڵ
  EXPECT_EQ(unicode::classify(U'َ'), CharClass::kMark);    // fatha
  EXPECT_EQ(unicode::classify(U'٣'), CharClass::kDigit);
  EXPECT_EQ(unicode::classify(U'۳'), CharClass::kDigit);
  EXPECT_EQ(unicode::classify(U'‌'), CharClass::kJoiner);
  EXPECT_EQ(unicode::classify(U'‍'), CharClass::kJoiner);
  EXPECT_EQ(unicode::classify(U'،'), CharClass::kOther);  // Arabic comma
  EXPECT_EQ(unicode::classify(U' '), CharClass::kWhitespace);
  EXPECT_EQ(unicode::classify(U'\n'), CharClass::kWhitespace);
}

TEST(UnicodeTest, ScriptBlocks) {
  EXPECT_TRUE(unicode::is_latin_letter(U'ş'));   // ş
  EXPECT_TRUE(unicode::is_latin_letter(U'ı'));   // ı
  EXPECT_FALSE(unicode::is_latin_letter(U'ە'));
  EXPECT_TRUE(unicode::is_arabic_block_letter(U'ە'));
  EXPECT_TRUE(unicode::is_arabic_block_letter(U'ﻫ'));  // presentation form
  EXPECT_FALSE(unicode::is_arabic_block_letter(U'١'));
}

TEST(UnicodeTest, LowerAndNfc) {
  EXPECT_EQ(unicode::to_lower(U'Ê'), U'ê');  // Ê
  EXPECT_EQ(unicode::to_lower(U'I'), U'i');
  // e + combining circumflex composes to ê; alef + hamza above to U+0623.
  EXPECT_EQ(unicode::nfc("e\xcc\x82"), "\xc3\xaa");
  EXPECT_EQ(unicode::nfc("\xd8\xa7\xd9\x94"), "\xd8\xa3");
  EXPECT_EQ(unicode::nfc(""), "");
}

}  // namespace
}  // namespace kurdtk
