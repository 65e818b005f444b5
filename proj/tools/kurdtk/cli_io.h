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

#ifndef KURDTK_TOOLS_CLI_IO_H_
#define KURDTK_TOOLS_CLI_IO_H_

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "kurdtk/corpus.h"
#include "kurdtk/error.h"
#include "kurdtk/stats.h"

namespace kurdtk::cli {

// Reads a path, or stdin for "" and "-".
class Input {
 public:
  explicit Input(const std::string& path);

  std::istream& stream() { return *in_; }
  const std::string& name() const { return name_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
  std::string name_;
};

// Writes to a temporary sibling of `path` and renames it over `path` on
// commit(); an uncommitted temporary is removed. "" and "-" mean stdout.
class Output {
 public:
  explicit Output(const std::string& path);
  ~Output();
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  std::ostream& stream() { return *out_; }
  void commit();

 private:
  std::string path_;
  std::string temp_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  bool committed_ = false;
};

// Streams records, turning MalformedRecord into an Error naming the file.
void for_each_document(Input& in, const std::function<void(Document&)>& fn);
void for_each_sentence(Input& in,
                       const std::function<void(LabeledSentence&)>& fn);
void for_each_tokenized(Input& in,
                        const std::function<void(TokenizedDocument&)>& fn);
// Non-empty lines with the trailing CR removed; fn gets the 1-based line.
void for_each_line(Input& in,
                   const std::function<void(std::string&, std::size_t)>& fn);

std::vector<LabeledSentence> read_dataset_file(const std::string& path);

std::string format_double(double v, int digits = 6);

}  // namespace kurdtk::cli

#endif  // KURDTK_TOOLS_CLI_IO_H_
