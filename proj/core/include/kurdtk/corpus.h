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

#ifndef KURDTK_CORPUS_H_
#define KURDTK_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kurdtk/label.h"

namespace kurdtk {

// One corpus record: text plus provenance metadata.
struct Document {
  std::string id;
  std::string text;
  std::string source;
  std::optional<std::string> topic;
  std::optional<std::string> title;
  std::optional<std::string> date;  // ISO-8601
  std::optional<Label> language;

  friend bool operator==(const Document&, const Document&) = default;
};

// Unit of language-identification training and evaluation.
struct LabeledSentence {
  std::string text;
  Label label;

  friend bool operator==(const LabeledSentence&,
                         const LabeledSentence&) = default;
};

// `YYYY-MM-DD`, optionally followed by `THH:MM[:SS[.fff]]` and `Z` or a
// `+HH:MM` offset. Calendar dates are checked (no 2023-02-30).
bool is_iso8601_date(std::string_view text);

// Throws InvalidDocument when a field breaks the Document invariants
// (empty id, invalid UTF-8, bad date). Uniqueness is a file-level property
// and is checked by the reader/writer.
void validate(const Document& doc);

// --- Line-record format ------------------------------------------------
//
// One compact JSON object per line, LF-terminated, UTF-8 emitted raw (not
// \u-escaped). Document keys appear in the fixed order
// id, text, source, topic, title, date, language; absent optionals are
// omitted. Control characters in strings (including newlines) use JSON
// escapes, so a record never spans lines. Dataset records use the keys
// text, label.

std::string to_record(const Document& doc);
std::string to_record(const LabeledSentence& sentence);

// `line_no` is only used for error reporting. Throws MalformedRecord.
Document document_from_record(std::string_view line, std::size_t line_no);
LabeledSentence sentence_from_record(std::string_view line,
                                     std::size_t line_no);

// Writes one record per document; returns the record count. Validates each
// document and rejects duplicate ids (InvalidDocument); stream failures
// throw IoError carrying the record index.
std::size_t write_corpus(std::span<const Document> documents,
                         std::ostream& sink);
std::size_t write_dataset(std::span<const LabeledSentence> sentences,
                          std::ostream& sink);

struct RecordError {
  std::size_t line;
  std::string reason;
};

// Streaming reader. Blank lines are skipped. In strict mode the first bad
// line throws MalformedRecord; in lenient mode it is recorded in errors()
// and skipped.
class CorpusReader {
 public:
  explicit CorpusReader(std::istream& in, bool lenient = false)
      : in_(in), lenient_(lenient) {}

  std::optional<Document> next();

  std::size_t line() const { return line_; }
  const std::vector<RecordError>& errors() const { return errors_; }

 private:
  std::istream& in_;
  bool lenient_;
  std::size_t line_ = 0;
  std::unordered_set<std::string> ids_;
  std::vector<RecordError> errors_;
};

class DatasetReader {
 public:
  explicit DatasetReader(std::istream& in, bool lenient = false)
      : in_(in), lenient_(lenient) {}

  std::optional<LabeledSentence> next();

  std::size_t line() const { return line_; }
  const std::vector<RecordError>& errors() const { return errors_; }

 private:
  std::istream& in_;
  bool lenient_;
  std::size_t line_ = 0;
  std::vector<RecordError> errors_;
};

std::vector<Document> read_corpus(std::istream& source);

struct LenientCorpus {
  std::vector<Document> documents;
  std::vector<RecordError> errors;
};
LenientCorpus read_corpus_lenient(std::istream& source);

std::vector<LabeledSentence> read_dataset(std::istream& source);

}  // namespace kurdtk

#endif  // KURDTK_CORPUS_H_
