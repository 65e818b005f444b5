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

#include "kurdtk/config.h"
#include "kurdtk/data_paths.h"
#include "kurdtk/error.h"

namespace kurdtk {
namespace {

TEST(ConfigTest, DefaultsPointAtShippedFiles) {
  const Config c = default_config();
  EXPECT_NO_THROW(check_config_files(c));
  EXPECT_EQ(c.lid, LidHyperparams{});
  EXPECT_EQ(c.seed, 1u);
}

TEST(ConfigTest, ShippedConfigMatchesDefaults) {
  Config c = default_config();
  apply_config_file(c, data_file("kurdtk.conf"));
  EXPECT_EQ(c.lid, default_config().lid);
  EXPECT_NO_THROW(check_config_files(c));
}

TEST(ConfigTest, AppliesValuesAndResolvesPaths) {
  Config c = default_config();
  std::istringstream in(
      "# comment\n"
      "lid.epochs = 5\n"
      "clean.digit_policy = fold-to-ascii\n"
      "tables.unification = tables/u.tsv\n"
      "seed = 42\n");
  apply_config(c, in, "/etc/kurdtk");
  EXPECT_EQ(c.lid.epochs, 5u);
  EXPECT_EQ(c.cleaning.digit_policy, DigitPolicy::kFoldToAscii);
  EXPECT_EQ(c.unification_table, "/etc/kurdtk/tables/u.tsv");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.lid.seed, 42u);
}

TEST(ConfigTest, Errors) {
  for (const char* text : {"nope = 1\n", "seed = 1\nseed = 2\n", "seed\n",
                           "lid.epochs = -3\n", "codeswitch.threshold = 2\n",
                           "clean.strip_urls = maybe\n", "lid.ngram_min = 9\n"}) {
    Config c = default_config();
    std::istringstream in(text);
    EXPECT_THROW(apply_config(c, in), ConfigError) << text;
  }
  Config c = default_config();
  c.affix_inventory = "/nonexistent/affixes.tsv";
  EXPECT_THROW(check_config_files(c), ConfigError);
}

TEST(ConfigTest, TextRoundTrip) {
  Config c = default_config();
  c.lid.learning_rate = 0.3;
  c.cleaning.zwnj_to_space = true;
  c.code_switch_threshold = 0.125;
  Config back = default_config();
  std::istringstream in(to_config_text(c));
  apply_config(back, in, "/");
  EXPECT_EQ(back.lid, c.lid);
  EXPECT_EQ(back.cleaning.zwnj_to_space, true);
  EXPECT_EQ(back.code_switch_threshold, 0.125);
  EXPECT_EQ(back.unification_table, c.unification_table);
}

}  // namespace
}  // namespace kurdtk
