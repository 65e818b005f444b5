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

#include "kurdtk/corpus.h"

#include <chrono>
#include <json.hpp>

#include "kurdtk/error.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"

namespace kurdtk {
namespace {

using Json = nlohmann::ordered_json;

bool digits(std::string_view s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return false;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

int number(std::string_view s, std::size_t pos, std::size_t n) {
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

bool valid_time(std::string_view t) {
  // HH:MM[:SS[.f+]] then optional Z or +HH:MM / -HH:MM
  if (!digits(t, 0, 2) || t.size() < 5 || t[2] != ':' || !digits(t, 3, 2))
    return false;
  if (number(t, 0, 2) > 23 || number(t, 3, 2) > 59) return false;
  std::size_t pos = 5;
  if (pos < t.size() && t[pos] == ':') {
    if (!digits(t, pos + 1, 2) || number(t, pos + 1, 2) > 60) return false;
    pos += 3;
    if (pos < t.size() && t[pos] == '.') {
      std::size_t start = ++pos;
      while (pos < t.size() && t[pos] >= '0' && t[pos] <= '9') ++pos;
      if (pos == start) return false;
    }
  }
  if (pos == t.size()) return true;
  if (t[pos] == 'Z') return pos + 1 == t.size();
  if (t[pos] != '+' && t[pos] != '-') return false;
  std::string_view off = t.substr(pos + 1);
  return off.size() == 5 && digits(off, 0, 2) && off[2] == ':' &&
         digits(off, 3, 2) && number(off, 0, 2) <= 23 &&
         number(off, 3, 2) <= 59;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
  }
  return true;
}

bool trimmed_empty(const std::string& text) {
  for (char32_t cp : utf8::decode(text)) {
    if (!unicode::is_whitespace(cp)) return false;
  }
  return true;
}

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

Json parse_object(std::string_view line, std::size_t line_no) {
  Json j;
  try {
    j = Json::parse(line.begin(), line.end());
  } catch (const Json::parse_error& e) {
    throw MalformedRecord(line_no, e.what());
  }
  if (!j.is_object()) throw MalformedRecord(line_no, "record is not an object");
  return j;
}

std::string string_field(const Json& j, const char* key, std::size_t line_no) {
  const Json& v = j.at(key);
  if (!v.is_string()) {
    throw MalformedRecord(line_no, std::string("field '") + key +
                                       "' is not a string");
  }
  return v.get<std::string>();
}

}  // namespace

bool is_iso8601_date(std::string_view text) {
  if (text.size() < 10 || !digits(text, 0, 4) || text[4] != '-' ||
      !digits(text, 5, 2) || text[7] != '-' || !digits(text, 8, 2)) {
    return false;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::year{number(text, 0, 4)},
      std::chrono::month{static_cast<unsigned>(number(text, 5, 2))},
      std::chrono::day{static_cast<unsigned>(number(text, 8, 2))}};
  if (!ymd.ok()) return false;
  if (text.size() == 10) return true;
  return text[10] == 'T' && valid_time(text.substr(11));
}

void validate(const Document& doc) {
  if (doc.id.empty()) throw InvalidDocument("document id is empty");
  auto check = [&](const std::string& s, const char* field) {
    if (!utf8::is_valid(s)) {
      throw InvalidDocument("document '" + doc.id + "': field " + field +
                            " is not valid UTF-8");
    }
  };
  check(doc.id, "id");
  check(doc.text, "text");
  check(doc.source, "source");
  if (doc.topic) check(*doc.topic, "topic");
  if (doc.title) check(*doc.title, "title");
  if (doc.date && !is_iso8601_date(*doc.date)) {
    throw InvalidDocument("document '" + doc.id + "': date '" + *doc.date +
                          "' is not ISO-8601");
  }
}

std::string to_record(const Document& doc) {
  Json j;
  j["id"] = doc.id;
  j["text"] = doc.text;
  j["source"] = doc.source;
  if (doc.topic) j["topic"] = *doc.topic;
  if (doc.title) j["title"] = *doc.title;
  if (doc.date) j["date"] = *doc.date;
  if (doc.language) j["language"] = doc.language->to_string();
  return dump(j);
}

std::string to_record(const LabeledSentence& sentence) {
  Json j;
  j["text"] = sentence.text;
  j["label"] = sentence.label.to_string();
  return dump(j);
}

Document document_from_record(std::string_view line, std::size_t line_no) {
  const Json j = parse_object(line, line_no);
  for (const auto& [key, value] : j.items()) {
    if (key != "id" && key != "text" && key != "source" && key != "topic" &&
        key != "title" && key != "date" && key != "language") {
      throw MalformedRecord(line_no, "unknown field '" + key + "'");
    }
  }
  for (const char* key : {"id", "text", "source"}) {
    if (!j.contains(key)) {
      throw MalformedRecord(line_no, std::string("missing field '") + key +
                                         "'");
    }
  }
  Document doc;
  doc.id = string_field(j, "id", line_no);
  doc.text = string_field(j, "text", line_no);
  doc.source = string_field(j, "source", line_no);
  if (j.contains("topic")) doc.topic = string_field(j, "topic", line_no);
  if (j.contains("title")) doc.title = string_field(j, "title", line_no);
  if (j.contains("date")) doc.date = string_field(j, "date", line_no);
  if (j.contains("language")) {
    try {
      doc.language = Label::parse(string_field(j, "language", line_no));
    } catch (const ParseError& e) {
      throw MalformedRecord(line_no, e.what());
    }
  }
  try {
    validate(doc);
  } catch (const InvalidDocument& e) {
    throw MalformedRecord(line_no, e.what());
  }
  return doc;
}

LabeledSentence sentence_from_record(std::string_view line,
                                     std::size_t line_no) {
  const Json j = parse_object(line, line_no);
  for (const auto& [key, value] : j.items()) {
    if (key != "text" && key != "label") {
      throw MalformedRecord(line_no, "unknown field '" + key + "'");
    }
  }
  if (!j.contains("text") || !j.contains("label")) {
    throw MalformedRecord(line_no, "dataset records need 'text' and 'label'");
  }
  LabeledSentence s{string_field(j, "text", line_no),
                    Label{LanguageCode::kmr, std::nullopt}};
  try {
    s.label = Label::parse(string_field(j, "label", line_no));
  } catch (const ParseError& e) {
    throw MalformedRecord(line_no, e.what());
  }
  if (trimmed_empty(s.text)) throw MalformedRecord(line_no, "empty text");
  return s;
}

std::size_t write_corpus(std::span<const Document> documents,
                         std::ostream& sink) {
  std::unordered_set<std::string> ids;
  std::size_t index = 0;
  for (const Document& doc : documents) {
    validate(doc);
    if (!ids.insert(doc.id).second) {
      throw InvalidDocument("duplicate document id '" + doc.id + "'");
    }
    std::string line = to_record(doc);
    line.push_back('\n');
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!sink) throw IoError("write failed", index);
    ++index;
  }
  return index;
}

std::size_t write_dataset(std::span<const LabeledSentence> sentences,
                          std::ostream& sink) {
  std::size_t index = 0;
  for (const LabeledSentence& s : sentences) {
    if (!utf8::is_valid(s.text) || trimmed_empty(s.text)) {
      throw InvalidDocument("sentence " + std::to_string(index) +
                            " is empty or not valid UTF-8");
    }
    std::string line = to_record(s);
    line.push_back('\n');
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!sink) throw IoError("write failed", index);
    ++index;
  }
  return index;
}

std::optional<Document> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (blank(line)) continue;
    try {
      Document doc = document_from_record(line, line_);
      if (!ids_.insert(doc.id).second) {
        throw MalformedRecord(line_, "duplicate id '" + doc.id + "'");
      }
      return doc;
    } catch (const MalformedRecord& e) {
      if (!lenient_) throw;
      errors_.push_back({e.line(), e.reason()});
    }
  }
  if (in_.bad()) throw IoError("read failed after line " + std::to_string(line_));
  return std::nullopt;
}

std::optional<LabeledSentence> DatasetReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (blank(line)) continue;
    try {
      return sentence_from_record(line, line_);
    } catch (const MalformedRecord& e) {
      if (!lenient_) throw;
      errors_.push_back({e.line(), e.reason()});
    }
  }
  if (in_.bad()) throw IoError("read failed after line " + std::to_string(line_));
  return std::nullopt;
}

std::vector<Document> read_corpus(std::istream& source) {
  CorpusReader reader(source);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

LenientCorpus read_corpus_lenient(std::istream& source) {
  CorpusReader reader(source, /*lenient=*/true);
  LenientCorpus out;
  while (auto doc = reader.next()) out.documents.push_back(std::move(*doc));
  out.errors = reader.errors();
  return out;
}

std::vector<LabeledSentence> read_dataset(std::istream& source) {
  DatasetReader reader(source);
  std::vector<LabeledSentence> out;
  while (auto s = reader.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace kurdtk
