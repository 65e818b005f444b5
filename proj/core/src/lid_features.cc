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

#include "kurdtk/lid_features.h"

#include "kurdtk/rng.h"
#include "kurdtk/tokenize.h"
#include "kurdtk/utf8.h"

namespace kurdtk {

std::uint64_t ngram_row(std::string_view ngram, std::uint64_t bucket_count,
                        std::size_t vocab_size) {
  return vocab_size + fnv1a64(ngram) % bucket_count;
}

std::vector<std::string> feature_words(std::string_view sentence) {
  std::vector<std::string> words;
  for (Token& t : tokenize(sentence)) {
    if (t.kind == TokenKind::kWord) words.push_back(std::move(t.surface));
  }
  return words;
}

std::vector<std::uint64_t> featurize(std::string_view sentence,
                                     const LidHyperparams& hyper,
                                     const WordVocab& vocab) {
  std::vector<std::uint64_t> features;
  std::vector<std::size_t> starts;  // byte offset of each codepoint
  for (const std::string& word : feature_words(sentence)) {
    if (hyper.include_word_unigrams) {
      if (long row = vocab.find(word); row >= 0) {
        features.push_back(static_cast<std::uint64_t>(row));
      }
    }
    const std::string padded = "<" + word + ">";
    starts.clear();
    for (std::size_t i = 0; i < padded.size(); ++i) {
      if ((static_cast<unsigned char>(padded[i]) & 0xC0) != 0x80) {
        starts.push_back(i);
      }
    }
    const std::size_t len = starts.size();
    starts.push_back(padded.size());
    for (std::size_t n = hyper.ngram_min; n <= hyper.ngram_max && n <= len;
         ++n) {
      for (std::size_t i = 0; i + n <= len; ++i) {
        const std::string_view gram(padded.data() + starts[i],
                                    starts[i + n] - starts[i]);
        features.push_back(ngram_row(gram, hyper.bucket_count, vocab.size()));
      }
    }
  }
  return features;
}

}  // namespace kurdtk
