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

#include "cli_io.h"

#include <cstdio>
#include <filesystem>
#include <unistd.h>

namespace kurdtk::cli {

Input::Input(const std::string& path) {
  if (path.empty() || path == "-") {
    in_ = &std::cin;
    name_ = "<stdin>";
    return;
  }
  file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*file_) throw IoError("cannot open " + path);
  in_ = file_.get();
  name_ = path;
}

Output::Output(const std::string& path) : path_(path) {
  if (path.empty() || path == "-") {
    out_ = &std::cout;
    return;
  }
  temp_ = path + ".tmp." + std::to_string(::getpid());
  file_ = std::make_unique<std::ofstream>(temp_, std::ios::binary |
                                                     std::ios::trunc);
  if (!*file_) throw IoError("cannot open " + temp_ + " for writing");
  out_ = file_.get();
}

Output::~Output() {
  if (file_ && !committed_) {
    file_->close();
    std::error_code ec;
    std::filesystem::remove(temp_, ec);
  }
}

void Output::commit() {
  if (!file_) {
    std::cout.flush();
    if (!std::cout) throw IoError("failed to write to stdout");
    committed_ = true;
    return;
  }
  file_->close();
  if (!*file_) throw IoError("failed to write " + path_);
  std::filesystem::rename(temp_, path_);
  committed_ = true;
}

namespace {

[[noreturn]] void rethrow_in(const Input& in, const MalformedRecord& e) {
  throw Error(in.name() + ":" + std::to_string(e.line()) + ": " + e.reason());
}

}  // namespace

void for_each_document(Input& in, const std::function<void(Document&)>& fn) {
  CorpusReader reader(in.stream());
  try {
    while (auto doc = reader.next()) fn(*doc);
  } catch (const MalformedRecord& e) {
    rethrow_in(in, e);
  }
}

void for_each_sentence(Input& in,
                       const std::function<void(LabeledSentence&)>& fn) {
  DatasetReader reader(in.stream());
  try {
    while (auto s = reader.next()) fn(*s);
  } catch (const MalformedRecord& e) {
    rethrow_in(in, e);
  }
}

void for_each_tokenized(Input& in,
                        const std::function<void(TokenizedDocument&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in.stream(), line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      TokenizedDocument doc = tokenized_from_record(line, line_no);
      fn(doc);
    }
  } catch (const MalformedRecord& e) {
    rethrow_in(in, e);
  }
}

void for_each_line(Input& in,
                   const std::function<void(std::string&, std::size_t)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in.stream(), line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(line, line_no);
  }
}

std::vector<LabeledSentence> read_dataset_file(const std::string& path) {
  Input in(path);
  std::vector<LabeledSentence> out;
  for_each_sentence(in, [&](LabeledSentence& s) { out.push_back(std::move(s)); });
  return out;
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace kurdtk::cli
