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

#include <algorithm>
#include <vector>

#include "kurdtk/error.h"
#include "kurdtk/label.h"

namespace kurdtk {
namespace {

TEST(LabelTest, ParseForms) {
  const Label full = Label::parse("ckb-arab");
  EXPECT_EQ(full.language, LanguageCode::ckb);
  EXPECT_EQ(full.script, ScriptCode::arab);
  EXPECT_EQ(Label::parse("ckbarab"), full);
  EXPECT_EQ(Label::parse("zza-latn-wiki").script, ScriptCode::latn_wiki);
  EXPECT_EQ(Label::parse("fa-arab-fa").script, ScriptCode::arab_fa);
  EXPECT_FALSE(Label::parse("kmr").script.has_value());
}

TEST(LabelTest, RejectsUnknownAndCased) {
  for (const char* bad : {"", "CKB", "ckb-", "ckb-cyrl", "xx", "ckb-unknown",
                          "ckb-arab-x"}) {
    EXPECT_THROW(Label::parse(bad), ParseError) << bad;
  }
}

TEST(LabelTest, RoundTripsEveryLabel) {
  for (LanguageCode lang : kAllLanguages) {
    const Label bare{lang, std::nullopt};
    EXPECT_EQ(Label::parse(bare.to_string()), bare);
    for (ScriptCode script : kLabelScripts) {
      const Label l{lang, script};
      EXPECT_EQ(Label::parse(l.to_string()), l);
    }
  }
}

TEST(LabelTest, OrderIsLanguageThenScript) {
  std::vector<Label> labels = {Label::parse("tr-latn"), Label::parse("ckb-latn"),
                               Label::parse("ckb"), Label::parse("kmr-arab"),
                               Label::parse("ckb-arab")};
  std::sort(labels.begin(), labels.end());
  std::vector<std::string> names;
  for (const Label& l : labels) names.push_back(l.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"kmr-arab", "ckb", "ckb-arab",
                                             "ckb-latn", "tr-latn"}));
}

}  // namespace
}  // namespace kurdtk
