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

#include "kurdtk/corpus.h"
#include "kurdtk/error.h"

namespace kurdtk {
namespace {

Document sample() {
  Document d;
  d.id = "doc-1";
  d.text = "ئەمڕۆ باران بارى.\nدوو \"هێڵ\"";
  d.source = "https://example.org/1";
  d.topic = "کۆمەڵایەتی";
  d.date = "2019-04-07";
  d.language = Label::parse("ckb-arab");
  return d;
}

TEST(CorpusTest, RecordLayout) {
  Document d;
  d.id = "a";
  d.text = "x\ny";
  d.source = "s";
  d.title = "T";
  EXPECT_EQ(to_record(d),
            R"({"id":"a","text":"x\ny","source":"s","title":"T"})");
  EXPECT_EQ(to_record(LabeledSentence{"ێ", Label::parse("ckb-arab")}),
            "{\"text\":\"ێ\",\"label\":\"ckb-arab\"}");
}

TEST(CorpusTest, WriteReadRoundTrip) {
  std::vector<Document> docs = {sample(), sample()};
  docs[1].id = "doc-2";
  docs[1].topic.reset();
  docs[1].language.reset();
  std::stringstream ss;
  EXPECT_EQ(write_corpus(docs, ss), 2u);
  EXPECT_EQ(read_corpus(ss), docs);
}

TEST(CorpusTest, WriterRejectsDuplicatesAndBadDates) {
  std::vector<Document> docs = {sample(), sample()};
  std::stringstream ss;
  EXPECT_THROW(write_corpus(docs, ss), InvalidDocument);
  Document bad = sample();
  bad.date = "2023-02-30";
  EXPECT_THROW(validate(bad), InvalidDocument);
  bad = sample();
  bad.text = "\xff";
  EXPECT_THROW(validate(bad), InvalidDocument);
}

TEST(CorpusTest, Iso8601) {
  EXPECT_TRUE(is_iso8601_date("2024-02-29"));
  EXPECT_FALSE(is_iso8601_date("2023-02-29"));
  EXPECT_TRUE(is_iso8601_date("2019-04-07T10:15:00+03:00"));
  EXPECT_TRUE(is_iso8601_date("2019-04-07T10:15Z"));
  EXPECT_TRUE(is_iso8601_date("2019-04-07T10:15:00.250Z"));
  EXPECT_FALSE(is_iso8601_date("2019-4-7"));
  EXPECT_FALSE(is_iso8601_date("2019-04-07T25:00"));
  EXPECT_FALSE(is_iso8601_date("2019-04-07 10:00"));
}

TEST(CorpusTest, StrictReaderReportsLine) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"t\",\"source\":\"s\"}\n"
      "\n"
      "{\"id\":\"b\",\"text\":\"t\"}\n");
  try {
    read_corpus(in);
    FAIL() << "expected MalformedRecord";
  } catch (const MalformedRecord& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(CorpusTest, ReaderRejectsUnknownFieldsAndDuplicateIds) {
  std::istringstream unknown("{\"id\":\"a\",\"text\":\"t\",\"source\":\"s\",\"x\":1}\n");
  EXPECT_THROW(read_corpus(unknown), MalformedRecord);
  std::istringstream dup(
      "{\"id\":\"a\",\"text\":\"t\",\"source\":\"s\"}\n"
      "{\"id\":\"a\",\"text\":\"u\",\"source\":\"s\"}\n");
  EXPECT_THROW(read_corpus(dup), MalformedRecord);
  std::istringstream wrong_type("{\"id\":1,\"text\":\"t\",\"source\":\"s\"}\n");
  EXPECT_THROW(read_corpus(wrong_type), MalformedRecord);
}

TEST(CorpusTest, LenientReaderCollectsErrors) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"t\",\"source\":\"s\"}\n"
      "not json\n"
      "{\"id\":\"b\",\"text\":\"t\",\"source\":\"s\",\"date\":\"yesterday\"}\n"
      "{\"id\":\"c\",\"text\":\"t\",\"source\":\"s\"}\n");
  const LenientCorpus out = read_corpus_lenient(in);
  ASSERT_EQ(out.documents.size(), 2u);
  EXPECT_EQ(out.documents[1].id, "c");
  ASSERT_EQ(out.errors.size(), 2u);
  EXPECT_EQ(out.errors[0].line, 2u);
  EXPECT_EQ(out.errors[1].line, 3u);
}

TEST(CorpusTest, DatasetRecords) {
  std::istringstream in(
      "{\"text\":\"Ez diçim\",\"label\":\"kmr-latn\"}\n"
      "{\"text\":\"من\",\"label\":\"ckbarab\"}\n");
  const auto rows = read_dataset(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].label, Label::parse("ckb-arab"));
  std::istringstream bad_label("{\"text\":\"x\",\"label\":\"klingon\"}\n");
  EXPECT_THROW(read_dataset(bad_label), MalformedRecord);
  std::istringstream blank("{\"text\":\"  \",\"label\":\"kmr\"}\n");
  EXPECT_THROW(read_dataset(blank), MalformedRecord);
}

class FailingBuf : public std::streambuf {
 protected:
  int overflow(int) override { return traits_type::eof(); }
  std::streamsize xsputn(const char*, std::streamsize) override { return 0; }
};

TEST(CorpusTest, WriteFailureCarriesIndex) {
  FailingBuf buf;
  std::ostream sink(&buf);
  const std::vector<Document> docs = {sample()};
  try {
    write_corpus(docs, sink);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.record_index(), 0u);
  }
}

}  // namespace
}  // namespace kurdtk
