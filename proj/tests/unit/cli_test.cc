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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(KURDTK_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& rel) {
  return std::string(KURDTK_TEST_DATA_DIR) + "/" + rel;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kurdtk-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("topk -k 0 " + data("stats/kmr.jsonl")).status, 1);
  EXPECT_EQ(run("stats /nonexistent.jsonl").status, 2);
  std::ofstream(path("bad.jsonl")) << "{\"id\":1}\n";
  EXPECT_EQ(run("stats " + path("bad.jsonl")).status, 2);
  EXPECT_EQ(run("stats " + data("stats/kmr.jsonl")).status, 0);
}

TEST_F(CliTest, FailedRunLeavesNoOutput) {
  std::ofstream(path("bad.jsonl")) << "{\"id\":\"a\",\"text\":\"t\",\"source\":\"s\"}\nnot json\n";
  EXPECT_EQ(run("tokenize " + path("bad.jsonl") + " -o " + path("out.jsonl")).status, 2);
  EXPECT_FALSE(fs::exists(path("out.jsonl")));
  for (const auto& e : fs::directory_iterator(dir_)) {
    EXPECT_EQ(e.path().filename().string().find(".tmp."), std::string::npos);
  }
}

TEST_F(CliTest, TokenizedPipelineMatchesDirectStats) {
  const std::string corpus = data("stats/ckb.jsonl");
  ASSERT_EQ(run("tokenize " + corpus + " -o " + path("tok.jsonl")).status, 0);
  const CliRun direct = run("stats " + corpus);
  const CliRun piped = run("stats --tokenized " + path("tok.jsonl"));
  EXPECT_EQ(direct.out, piped.out);
  EXPECT_NE(direct.out.find("types: 7\n"), std::string::npos);
}

TEST_F(CliTest, ConfigLayering) {
  // Default threshold flags the Arabic sentence; the config raises it and
  // the flag lowers it again.
  std::ofstream(path("k.conf")) << "codeswitch.threshold = 0.5\n";
  const std::string corpus = data("stats/ckb.jsonl");
  EXPECT_NE(run("stats " + corpus).out.find("flagged_sentences: 1"), std::string::npos);
  EXPECT_NE(run("--config " + path("k.conf") + " stats " + corpus).out.find("flagged_sentences: 0"),
            std::string::npos);
  EXPECT_NE(run("--config " + path("k.conf") + " stats --threshold 0.1 " + corpus)
                .out.find("flagged_sentences: 1"),
            std::string::npos);
  std::ofstream(path("bad.conf")) << "lid.unknown = 1\n";
  EXPECT_EQ(run("--config " + path("bad.conf") + " stats " + corpus).status, 2);
}

TEST_F(CliTest, TextCommands) {
  EXPECT_EQ(run("normalize --text 'كتێبى'").out, "کتێبی\n");
  EXPECT_EQ(run("normalize --table both --text 'شه‌قام'").out, "شەقام\n");
  EXPECT_EQ(run("translit --to latn --text 'له'").out, "le\n");
  EXPECT_EQ(run("detect-script --text 'Na kıtab zaf weş o'").out, "latn-wiki\n");
  EXPECT_EQ(run("clean --digits fold-to-ascii --text 'x ١٢  y'").out, "x 12 y\n");
  EXPECT_EQ(run("tokenize --text 'a, b'").out, "a\tword\n,\tpunct\nb\tword\n");
  EXPECT_EQ(run("--format records topk -k 1 " + data("stats/synthetic.jsonl")).out,
            "{\"type\":\"na\",\"frequency\":6}\n");
}

TEST_F(CliTest, IngestAndSplit) {
  const CliRun r = run("ingest --language ckb-arab " + data("html/article.html"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"language\":\"ckb-arab\""), std::string::npos);
  std::ofstream ds(path("ds.jsonl"));
  for (int i = 0; i < 10; ++i) {
    ds << "{\"text\":\"kmr " << i << "\",\"label\":\"kmr-latn\"}\n"
       << "{\"text\":\"ckb " << i << "\",\"label\":\"ckb-arab\"}\n";
  }
  ds.close();
  ASSERT_EQ(run("split -n 10 " + path("ds.jsonl") + " --train-out " + path("tr") +
                " --test-out " + path("te")).status, 0);
  std::ifstream te(path("te"));
  int lines = 0;
  for (std::string l; std::getline(te, l);) ++lines;
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(run("split -n 11 " + path("ds.jsonl") + " --train-out " + path("tr2") +
                " --test-out " + path("te2")).status, 2);
}

TEST_F(CliTest, LidTrainPredictEval) {
  std::ofstream ds(path("ds.jsonl"));
  const char* kmr[] = {"ez diçim malê", "tu çawa yî", "em ê werin", "ev baş e"};
  const char* ckb[] = {"من دەچمە ماڵەوە", "تۆ چۆنی", "ئێمە دێین", "ئەمە باشە"};
  for (int i = 0; i < 4; ++i) {
    ds << "{\"text\":\"" << kmr[i] << "\",\"label\":\"kmr-latn\"}\n"
       << "{\"text\":\"" << ckb[i] << "\",\"label\":\"ckb-arab\"}\n";
  }
  ds.close();
  const std::string hyper = " --dim 8 --bucket 1000 --epochs 20 ";
  ASSERT_EQ(run("-q lid-train --train " + path("ds.jsonl") + " --model " + path("m") + hyper).status, 0);
  const CliRun p = run("lid-predict --model " + path("m") + " --text 'ez diçim'");
  EXPECT_EQ(p.out.substr(0, 9), "kmr-latn\t");
  const CliRun e = run("lid-eval --model " + path("m") + " --test " + path("ds.jsonl") +
                    " --confusion " + path("c.csv"));
  EXPECT_EQ(e.status, 0);
  EXPECT_TRUE(fs::exists(path("c.csv")));
  ASSERT_EQ(run("-q lid-train --scheme language-only --train " + path("ds.jsonl") +
                " --model " + path("m2") + hyper).status, 0);
  EXPECT_EQ(run("lid-predict --model " + path("m2") + " --text 'ez diçim'").out.substr(0, 4),
            "kmr\t");
  std::ofstream(path("ext.tsv")) << "kmr\tkmr\nckb\tkmr\n";
  EXPECT_NE(run("lid-eval-external " + path("ext.tsv")).out.find("accuracy 0.5"),
            std::string::npos);
}

}  // namespace
