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

#ifndef KURDTK_STATS_H_
#define KURDTK_STATS_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kurdtk/corpus.h"
#include "kurdtk/normalize.h"
#include "kurdtk/tokenize.h"

namespace kurdtk {

// Ordered so that iteration and serialization are deterministic.
using TypeCounts = std::map<std::string, std::uint64_t, std::less<>>;

using KindSet = std::set<TokenKind>;

inline const KindSet kDefaultExclusions = {TokenKind::kPunctuation,
                                           TokenKind::kDigit};

// Counts word surfaces exactly (no case or diacritic folding). Tokens whose
// kind is in `exclusions` are skipped.
TypeCounts extract_types(std::span<const Token> tokens,
                         const KindSet& exclusions = kDefaultExclusions);

// Per-sentence variant: sentences whose flag is set contribute nothing.
// `flags` is either empty or parallel to `sentences`.
TypeCounts extract_types(std::span<const std::vector<Token>> sentences,
                         const KindSet& exclusions,
                         std::span<const CodeSwitchFlag> flags);

void merge_into(TypeCounts& into, const TypeCounts& from);

struct StatsReport {
  std::uint64_t articles = 0;
  std::uint64_t tokens = 0;  // all kinds, before exclusions
  std::uint64_t types = 0;
  std::uint64_t type_characters = 0;  // Unicode scalar values
  double average_type_length = 0.0;
  std::uint64_t sentences = 0;
  std::uint64_t flagged_sentences = 0;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

struct StatsOptions {
  KindSet exclusions = kDefaultExclusions;
  bool drop_flagged = true;
  double code_switch_threshold = kDefaultCodeSwitchThreshold;
  TokenizerOptions tokenizer;
};

struct CorpusCounts {
  StatsReport report;
  TypeCounts types;
};

// A document after sentence splitting and tokenization.
struct TokenizedDocument {
  std::string id;
  std::vector<std::vector<Token>> sentences;

  friend bool operator==(const TokenizedDocument&,
                         const TokenizedDocument&) = default;
};

TokenizedDocument tokenize_document(const Document& doc,
                                    const TokenizerOptions& options = {});

// {"id":...,"sentences":[[["surface","word"],...],...]} on one line.
std::string to_record(const TokenizedDocument& doc);
// Throws MalformedRecord.
TokenizedDocument tokenized_from_record(std::string_view line,
                                        std::size_t line_no);

// Adds one document to running counts. The code-switch flag of a sentence
// is computed on the concatenated token surfaces, which carry every letter
// of the sentence. Call finish_report once all documents are in.
void accumulate(CorpusCounts& counts, const TokenizedDocument& doc,
                const StatsOptions& options);

// Splits each document into sentences, tokenizes, flags code-switching and
// extracts types. Throws EmptyCorpus for zero documents.
CorpusCounts corpus_counts(std::span<const Document> corpus,
                           const StatsOptions& options = {});

StatsReport corpus_stats(std::span<const Document> corpus,
                         const StatsOptions& options = {});

// Fills types, type_characters and average_type_length from `types`.
void finish_report(StatsReport& report, const TypeCounts& types);

// `key: value` lines in field order.
void write_report_text(const StatsReport& report, std::ostream& out);
// One line-record with the same keys.
std::string report_record(const StatsReport& report);

struct RankRow {
  std::uint64_t rank;
  std::string type;
  std::uint64_t frequency;

  friend bool operator==(const RankRow&, const RankRow&) = default;
};

using RankFrequencyTable = std::vector<RankRow>;

// Descending frequency, ties by bytewise order of the type, ranks from 1.
// Throws EmptyInput for an empty map.
RankFrequencyTable rank_frequency(const TypeCounts& counts);

// `rank,type,frequency` with RFC 4180 quoting where needed.
void write_zipf_csv(const RankFrequencyTable& table, std::ostream& out);

struct ZipfFit {
  double slope;
  double intercept;
};

// OLS of log10(frequency) on log10(rank) over ranks [rank_min, rank_max].
// Throws RangeTooSmall unless 1 <= rank_min, rank_max <= table size and the
// window holds at least 3 rows.
ZipfFit zipf_fit(const RankFrequencyTable& table, std::uint64_t rank_min,
                 std::uint64_t rank_max);

// First k rows of rank_frequency. Throws InvalidArgument for k == 0.
std::vector<std::pair<std::string, std::uint64_t>> top_k(
    const TypeCounts& counts, std::size_t k);

}  // namespace kurdtk

#endif  // KURDTK_STATS_H_
