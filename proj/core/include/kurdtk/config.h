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

#ifndef KURDTK_CONFIG_H_
#define KURDTK_CONFIG_H_

#include <cstdint>
#include <istream>
#include <string>

#include "kurdtk/lid_model.h"
#include "kurdtk/normalize.h"

namespace kurdtk {

// Toolkit configuration. Layering is flags > config file > defaults; this
// type covers the last two.
//
// File format: UTF-8 `key = value` lines, `#` comments. Keys:
//   tables.unification        tables.harmonization
//   translit.arab_to_latin    translit.latin_to_arab
//   stats.affixes
//   clean.strip_emails        clean.strip_urls
//   clean.collapse_whitespace clean.digit_policy
//   clean.zwnj_to_space
//   codeswitch.threshold
//   lid.embedding_dim  lid.ngram_min  lid.ngram_max  lid.epochs
//   lid.learning_rate  lid.bucket_count  lid.include_word_unigrams
//   seed
// Relative paths resolve against the config file's directory.
struct Config {
  std::string unification_table;
  std::string harmonization_table;
  std::string arab_to_latin_rules;
  std::string latin_to_arab_rules;
  std::string affix_inventory;
  CleaningPolicy cleaning;
  double code_switch_threshold = kDefaultCodeSwitchThreshold;
  LidHyperparams lid;
  std::uint64_t seed = 1;
};

// Built-in defaults pointing at the shipped data files.
Config default_config();

// Applies the file on top of `config`. Unknown keys, duplicate keys and bad
// values throw ConfigError with the line number.
void apply_config(Config& config, std::istream& in,
                  const std::string& base_dir = ".");
void apply_config_file(Config& config, const std::string& path);

// Loads every referenced table so broken files fail early. Throws
// ConfigError naming the file.
void check_config_files(const Config& config);

// Serializes in the file format; apply_config on the output reproduces the
// same Config.
std::string to_config_text(const Config& config);

}  // namespace kurdtk

#endif  // KURDTK_CONFIG_H_
