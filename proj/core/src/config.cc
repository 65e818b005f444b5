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

#include "kurdtk/config.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kurdtk/affix.h"
#include "kurdtk/data_paths.h"
#include "kurdtk/error.h"
#include "kurdtk/translit.h"
#include "text_table.h"

namespace kurdtk {

Config default_config() {
  Config c;
  c.unification_table = data_file("normalize/encoding-unification.tsv");
  c.harmonization_table = data_file("normalize/kurdish-harmonization.tsv");
  c.arab_to_latin_rules = data_file("translit/arab-latn.tsv");
  c.latin_to_arab_rules = data_file("translit/latn-arab.tsv");
  c.affix_inventory = data_file("affixes.tsv");
  return c;
}

namespace {

bool parse_bool(std::string_view v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ParseError("expected true or false, got '" + std::string(v) + "'");
}

template <typename T>
T parse_unsigned(std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("expected a non-negative integer, got '" +
                     std::string(v) + "'");
  }
  return out;
}

double parse_double(std::string_view v) {
  std::string s(v);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw ParseError("expected a number, got '" + s + "'");
  }
  return out;
}

using Setter = std::function<void(Config&, std::string_view,
                                  const std::filesystem::path&)>;

Setter path_setter(std::string Config::*member) {
  return [member](Config& c, std::string_view v,
                  const std::filesystem::path& base) {
    std::filesystem::path p(std::string{v});
    if (p.is_relative()) p = base / p;
    c.*member = p.lexically_normal().string();
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  using P = const std::filesystem::path&;
  static const std::map<std::string, Setter, std::less<>> table = {
      {"tables.unification", path_setter(&Config::unification_table)},
      {"tables.harmonization", path_setter(&Config::harmonization_table)},
      {"translit.arab_to_latin", path_setter(&Config::arab_to_latin_rules)},
      {"translit.latin_to_arab", path_setter(&Config::latin_to_arab_rules)},
      {"stats.affixes", path_setter(&Config::affix_inventory)},
      {"clean.strip_emails",
       [](Config& c, std::string_view v, P) {
         c.cleaning.strip_emails = parse_bool(v);
       }},
      {"clean.strip_urls",
       [](Config& c, std::string_view v, P) {
         c.cleaning.strip_urls = parse_bool(v);
       }},
      {"clean.collapse_whitespace",
       [](Config& c, std::string_view v, P) {
         c.cleaning.collapse_whitespace = parse_bool(v);
       }},
      {"clean.digit_policy",
       [](Config& c, std::string_view v, P) {
         c.cleaning.digit_policy = parse_digit_policy(v);
       }},
      {"clean.zwnj_to_space",
       [](Config& c, std::string_view v, P) {
         c.cleaning.zwnj_to_space = parse_bool(v);
       }},
      {"codeswitch.threshold",
       [](Config& c, std::string_view v, P) {
         c.code_switch_threshold = parse_double(v);
         if (!(c.code_switch_threshold > 0.0 &&
               c.code_switch_threshold <= 1.0)) {
           throw ParseError("threshold must lie in (0, 1]");
         }
       }},
      {"lid.embedding_dim",
       [](Config& c, std::string_view v, P) {
         c.lid.embedding_dim = parse_unsigned<std::uint32_t>(v);
       }},
      {"lid.ngram_min",
       [](Config& c, std::string_view v, P) {
         c.lid.ngram_min = parse_unsigned<std::uint32_t>(v);
       }},
      {"lid.ngram_max",
       [](Config& c, std::string_view v, P) {
         c.lid.ngram_max = parse_unsigned<std::uint32_t>(v);
       }},
      {"lid.epochs",
       [](Config& c, std::string_view v, P) {
         c.lid.epochs = parse_unsigned<std::uint32_t>(v);
       }},
      {"lid.learning_rate",
       [](Config& c, std::string_view v, P) {
         c.lid.learning_rate = parse_double(v);
       }},
      {"lid.bucket_count",
       [](Config& c, std::string_view v, P) {
         c.lid.bucket_count = parse_unsigned<std::uint64_t>(v);
       }},
      {"lid.include_word_unigrams",
       [](Config& c, std::string_view v, P) {
         c.lid.include_word_unigrams = parse_bool(v);
       }},
      {"seed",
       [](Config& c, std::string_view v, P) {
         c.seed = parse_unsigned<std::uint64_t>(v);
         c.lid.seed = c.seed;
       }},
  };
  return table;
}

}  // namespace

void apply_config(Config& config, std::istream& in,
                  const std::string& base_dir) {
  const std::filesystem::path base(base_dir);
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::string where = "config line " + std::to_string(line_no);
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected key = value");
    }
    const std::string_view key = detail::trim(view.substr(0, eq));
    const std::string_view value = detail::trim(view.substr(eq + 1));
    auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(where + ": duplicate key '" + std::string(key) + "'");
    }
    try {
      it->second(config, value, base);
    } catch (const ParseError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  try {
    config.lid.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("lid settings: ") + e.what());
  }
  if (!config.cleaning.any_active()) {
    throw ConfigError("cleaning policy has no active option");
  }
}

void apply_config_file(Config& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  const std::filesystem::path parent =
      std::filesystem::path(path).parent_path();
  try {
    apply_config(config, in, parent.empty() ? "." : parent.string());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void check_config_files(const Config& config) {
  auto check = [](const std::string& path, auto&& load) {
    try {
      load(path);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  };
  check(config.unification_table,
        [](const std::string& p) { NormalizationTable::load(p); });
  check(config.harmonization_table,
        [](const std::string& p) { NormalizationTable::load(p); });
  check(config.arab_to_latin_rules,
        [](const std::string& p) { RuleTable::load(p); });
  check(config.latin_to_arab_rules,
        [](const std::string& p) { RuleTable::load(p); });
  check(config.affix_inventory,
        [](const std::string& p) { AffixInventory::load(p); });
}

std::string to_config_text(const Config& c) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  char num[64];
  out << "tables.unification = " << c.unification_table << '\n'
      << "tables.harmonization = " << c.harmonization_table << '\n'
      << "translit.arab_to_latin = " << c.arab_to_latin_rules << '\n'
      << "translit.latin_to_arab = " << c.latin_to_arab_rules << '\n'
      << "stats.affixes = " << c.affix_inventory << '\n'
      << "clean.strip_emails = " << b(c.cleaning.strip_emails) << '\n'
      << "clean.strip_urls = " << b(c.cleaning.strip_urls) << '\n'
      << "clean.collapse_whitespace = " << b(c.cleaning.collapse_whitespace)
      << '\n'
      << "clean.digit_policy = " << to_string(c.cleaning.digit_policy) << '\n'
      << "clean.zwnj_to_space = " << b(c.cleaning.zwnj_to_space) << '\n';
  std::snprintf(num, sizeof num, "%.17g", c.code_switch_threshold);
  out << "codeswitch.threshold = " << num << '\n'
      << "lid.embedding_dim = " << c.lid.embedding_dim << '\n'
      << "lid.ngram_min = " << c.lid.ngram_min << '\n'
      << "lid.ngram_max = " << c.lid.ngram_max << '\n'
      << "lid.epochs = " << c.lid.epochs << '\n';
  std::snprintf(num, sizeof num, "%.17g", c.lid.learning_rate);
  out << "lid.learning_rate = " << num << '\n'
      << "lid.bucket_count = " << c.lid.bucket_count << '\n'
      << "lid.include_word_unigrams = " << b(c.lid.include_word_unigrams)
      << '\n'
      << "seed = " << c.seed << '\n';
  return out.str();
}

}  // namespace kurdtk
