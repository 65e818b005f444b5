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

#ifndef KURDTK_LID_MODEL_H_
#define KURDTK_LID_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kurdtk/label.h"

namespace kurdtk {

struct LidHyperparams {
  std::uint32_t embedding_dim = 64;
  std::uint32_t ngram_min = 2;
  std::uint32_t ngram_max = 6;
  std::uint32_t epochs = 25;
  double learning_rate = 1.0;
  std::uint64_t bucket_count = 2'000'000;
  bool include_word_unigrams = true;
  std::uint64_t seed = 1;

  // Throws InvalidArgument.
  void validate() const;

  friend bool operator==(const LidHyperparams&,
                         const LidHyperparams&) = default;
};

enum class LabelScheme { kLanguageOnly, kLanguageAndScript };

std::string_view to_string(LabelScheme scheme);
LabelScheme parse_label_scheme(std::string_view text);  // throws ParseError

bool matches_scheme(const Label& label, LabelScheme scheme);

// language-only drops the script; language-and-script is the identity and
// throws MissingScript on a script-less label.
Label aggregate_label(const Label& label, LabelScheme scheme);

// Word -> input row. Rows are assigned in bytewise order of the words.
class WordVocab {
 public:
  WordVocab() = default;
  explicit WordVocab(std::vector<std::string> words);  // sorts, dedupes

  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  // Row index or -1.
  long find(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Input rows: word_vocab.size() word rows followed by bucket_count n-gram
// rows. Both matrices are row-major float.
struct LidModel {
  LidHyperparams hyper;
  LabelScheme scheme = LabelScheme::kLanguageAndScript;
  std::vector<Label> labels;
  WordVocab word_vocab;
  std::vector<float> input_embeddings;
  std::vector<float> output_weights;

  std::size_t input_rows() const {
    return word_vocab.size() + static_cast<std::size_t>(hyper.bucket_count);
  }
  std::size_t dim() const { return hyper.embedding_dim; }

  // Zero-filled matrices of the right shape.
  void allocate();

  // Shapes, label/scheme consistency, finiteness. Throws InvalidModel.
  void validate() const;

  long label_index(const Label& label) const;
};

// Binary container, all integers and floats little-endian:
//   "KTLIDMDL"  magic (8 bytes)
//   u32         format version (1)
//   u32 dim, u32 ngram_min, u32 ngram_max, u32 epochs,
//   f64 learning_rate, u64 bucket_count, u8 include_word_unigrams,
//   u64 seed, u8 scheme (0 language-only, 1 language-and-script)
//   u32 label count, then per label: u32 byte length + UTF-8 label
//   u32 vocab size,  then per word:  u32 byte length + UTF-8 word
//   f32 input embeddings, row-major
//   f32 output weights,   row-major
void save_model(const LidModel& model, std::ostream& out);
void save_model(const LidModel& model, const std::string& path);
// Throws InvalidModel on a bad container.
LidModel load_model(std::istream& in);
LidModel load_model(const std::string& path);

struct Prediction {
  std::vector<std::pair<Label, double>> ranked;
};

// Softmax over model labels for one sentence.
std::vector<double> score(const LidModel& model, std::string_view sentence);

// Top-k labels, probability descending, ties by model label order.
// Throws InvalidArgument for k == 0.
Prediction predict(const LidModel& model, std::string_view sentence,
                   std::size_t k = 1);

}  // namespace kurdtk

#endif  // KURDTK_LID_MODEL_H_
