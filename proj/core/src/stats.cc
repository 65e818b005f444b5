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

#include "kurdtk/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "kurdtk/error.h"
#include "kurdtk/utf8.h"

namespace kurdtk {

TypeCounts extract_types(std::span<const Token> tokens,
                         const KindSet& exclusions) {
  TypeCounts counts;
  for (const Token& t : tokens) {
    if (exclusions.contains(t.kind)) continue;
    auto it = counts.find(t.surface);
    if (it == counts.end()) counts.emplace(t.surface, 1);
    else ++it->second;
  }
  return counts;
}

TypeCounts extract_types(std::span<const std::vector<Token>> sentences,
                         const KindSet& exclusions,
                         std::span<const CodeSwitchFlag> flags) {
  if (!flags.empty() && flags.size() != sentences.size()) {
    throw InvalidArgument("one code-switch flag per sentence is required");
  }
  TypeCounts counts;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!flags.empty() && flags[i].flagged) continue;
    merge_into(counts, extract_types(sentences[i], exclusions));
  }
  return counts;
}

void merge_into(TypeCounts& into, const TypeCounts& from) {
  for (const auto& [type, n] : from) into[type] += n;
}

TokenizedDocument tokenize_document(const Document& doc,
                                    const TokenizerOptions& options) {
  TokenizedDocument out;
  out.id = doc.id;
  for (const std::string& sentence : split_sentences(doc.text)) {
    out.sentences.push_back(tokenize(sentence, options));
  }
  return out;
}

std::string to_record(const TokenizedDocument& doc) {
  nlohmann::ordered_json j;
  j["id"] = doc.id;
  nlohmann::ordered_json sentences = nlohmann::ordered_json::array();
  for (const auto& sentence : doc.sentences) {
    nlohmann::ordered_json tokens = nlohmann::ordered_json::array();
    for (const Token& t : sentence) {
      tokens.push_back({t.surface, std::string(to_string(t.kind))});
    }
    sentences.push_back(std::move(tokens));
  }
  j["sentences"] = std::move(sentences);
  return j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::strict);
}

TokenizedDocument tokenized_from_record(std::string_view line,
                                        std::size_t line_no) {
  using Json = nlohmann::ordered_json;
  TokenizedDocument doc;
  try {
    const Json j = Json::parse(line.begin(), line.end());
    doc.id = j.at("id").get<std::string>();
    for (const Json& sentence : j.at("sentences")) {
      std::vector<Token>& tokens = doc.sentences.emplace_back();
      for (const Json& t : sentence) {
        if (!t.is_array() || t.size() != 2) {
          throw MalformedRecord(line_no, "token is not a [surface, kind] pair");
        }
        const std::string kind = t[1].get<std::string>();
        TokenKind k;
        if (kind == "word") k = TokenKind::kWord;
        else if (kind == "punct") k = TokenKind::kPunctuation;
        else if (kind == "digit") k = TokenKind::kDigit;
        else throw MalformedRecord(line_no, "unknown token kind '" + kind + "'");
        std::string surface = t[0].get<std::string>();
        if (surface.empty()) throw MalformedRecord(line_no, "empty token");
        tokens.push_back({std::move(surface), k});
      }
    }
  } catch (const Json::exception& e) {
    throw MalformedRecord(line_no, e.what());
  }
  return doc;
}

void accumulate(CorpusCounts& counts, const TokenizedDocument& doc,
                const StatsOptions& options) {
  ++counts.report.articles;
  for (const std::vector<Token>& tokens : doc.sentences) {
    ++counts.report.sentences;
    counts.report.tokens += tokens.size();
    if (options.drop_flagged) {
      std::string letters;
      for (const Token& t : tokens) letters += t.surface;
      if (flag_code_switch(letters, options.code_switch_threshold).flagged) {
        ++counts.report.flagged_sentences;
        continue;
      }
    }
    for (const Token& t : tokens) {
      if (!options.exclusions.contains(t.kind)) ++counts.types[t.surface];
    }
  }
}

CorpusCounts corpus_counts(std::span<const Document> corpus,
                           const StatsOptions& options) {
  if (corpus.empty()) throw EmptyCorpus("corpus has no documents");
  CorpusCounts out;
  for (const Document& doc : corpus) {
    accumulate(out, tokenize_document(doc, options.tokenizer), options);
  }
  finish_report(out.report, out.types);
  return out;
}

StatsReport corpus_stats(std::span<const Document> corpus,
                         const StatsOptions& options) {
  return corpus_counts(corpus, options).report;
}

void finish_report(StatsReport& report, const TypeCounts& types) {
  report.types = types.size();
  report.type_characters = 0;
  for (const auto& [type, n] : types) report.type_characters += utf8::length(type);
  report.average_type_length =
      report.types == 0 ? 0.0
                        : static_cast<double>(report.type_characters) /
                              static_cast<double>(report.types);
}

void write_report_text(const StatsReport& r, std::ostream& out) {
  char avg[32];
  std::snprintf(avg, sizeof avg, "%.6f", r.average_type_length);
  out << "articles: " << r.articles << '\n'
      << "sentences: " << r.sentences << '\n'
      << "flagged_sentences: " << r.flagged_sentences << '\n'
      << "tokens: " << r.tokens << '\n'
      << "types: " << r.types << '\n'
      << "type_characters: " << r.type_characters << '\n'
      << "average_type_length: " << avg << '\n';
}

std::string report_record(const StatsReport& r) {
  nlohmann::ordered_json j;
  j["articles"] = r.articles;
  j["sentences"] = r.sentences;
  j["flagged_sentences"] = r.flagged_sentences;
  j["tokens"] = r.tokens;
  j["types"] = r.types;
  j["type_characters"] = r.type_characters;
  j["average_type_length"] = r.average_type_length;
  return j.dump();
}

RankFrequencyTable rank_frequency(const TypeCounts& counts) {
  if (counts.empty()) throw EmptyInput("rank_frequency: no types");
  std::vector<std::pair<std::string_view, std::uint64_t>> rows;
  rows.reserve(counts.size());
  for (const auto& [type, n] : counts) rows.emplace_back(type, n);
  // Map iteration is already bytewise ascending, so a stable sort on
  // frequency alone keeps the tie order.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  RankFrequencyTable table;
  table.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.push_back({i + 1, std::string(rows[i].first), rows[i].second});
  }
  return table;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_zipf_csv(const RankFrequencyTable& table, std::ostream& out) {
  out << "rank,type,frequency\n";
  for (const RankRow& row : table) {
    out << row.rank << ',' << csv_field(row.type) << ',' << row.frequency
        << '\n';
  }
}

ZipfFit zipf_fit(const RankFrequencyTable& table, std::uint64_t rank_min,
                 std::uint64_t rank_max) {
  if (rank_min < 1 || rank_max > table.size() || rank_max < rank_min ||
      rank_max - rank_min + 1 < 3) {
    throw RangeTooSmall("zipf_fit needs at least 3 ranks inside 1.." +
                        std::to_string(table.size()));
  }
  const std::size_t n = rank_max - rank_min + 1;
  std::vector<double> xs(n), ys(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const RankRow& row = table[rank_min - 1 + i];
    xs[i] = std::log10(static_cast<double>(row.rank));
    ys[i] = std::log10(static_cast<double>(row.frequency));
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

std::vector<std::pair<std::string, std::uint64_t>> top_k(
    const TypeCounts& counts, std::size_t k) {
  if (k == 0) throw InvalidArgument("top_k: k must be at least 1");
  std::vector<std::pair<std::string, std::uint64_t>> out;
  if (counts.empty()) return out;
  for (RankRow& row : rank_frequency(counts)) {
    if (out.size() == k) break;
    out.emplace_back(std::move(row.type), row.frequency);
  }
  return out;
}

}  // namespace kurdtk
