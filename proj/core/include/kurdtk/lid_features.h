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

#ifndef KURDTK_LID_FEATURES_H_
#define KURDTK_LID_FEATURES_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "kurdtk/lid_model.h"

namespace kurdtk {

// Input-row index of one character n-gram: the 64-bit FNV-1a hash of its
// UTF-8 bytes modulo bucket_count, offset by the vocabulary size.
std::uint64_t ngram_row(std::string_view ngram, std::uint64_t bucket_count,
                        std::size_t vocab_size);

// Feature rows of a sentence. For every word token w of the tokenizer, in
// order: the vocabulary row of w (when include_word_unigrams and w is
// known), then every codepoint n-gram of "<" w ">" with ngram_min <= n <=
// ngram_max, shortest n first, left to right. Duplicates are kept.
std::vector<std::uint64_t> featurize(std::string_view sentence,
                                     const LidHyperparams& hyper,
                                     const WordVocab& vocab);

// Word tokens of a sentence, as featurize sees them.
std::vector<std::string> feature_words(std::string_view sentence);

}  // namespace kurdtk

#endif  // KURDTK_LID_FEATURES_H_
