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

#ifndef KURDTK_TOKENIZE_H_
#define KURDTK_TOKENIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace kurdtk {

enum class TokenKind { kWord, kPunctuation, kDigit };

std::string_view to_string(TokenKind kind);

struct Token {
  std::string surface;
  TokenKind kind;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizerOptions {
  // Treat ZWNJ as a boundary; it then becomes its own punctuation token.
  bool split_on_zwnj = false;
};

// Scans codepoints left to right:
//  - whitespace separates tokens and is dropped;
//  - letters (L*) and combining marks (M*) form word runs; ZWNJ and ZWJ
//    inside or at the edge of a word run belong to it, and an isolated
//    joiner is a punctuation token;
//  - decimal digit (Nd) runs form digit tokens;
//  - every other codepoint is a one-codepoint punctuation token.
// Every non-whitespace codepoint of the input lands in exactly one token.
std::vector<Token> tokenize(std::string_view text,
                            const TokenizerOptions& options = {});

// Splits running text into sentences after . ! ? ؟ ۔ … runs and at line
// breaks. Sentences are trimmed; empty ones are dropped.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace kurdtk

#endif  // KURDTK_TOKENIZE_H_
