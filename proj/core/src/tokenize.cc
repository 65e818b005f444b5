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

#include "kurdtk/tokenize.h"

#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"

namespace kurdtk {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kPunctuation: return "punct";
    case TokenKind::kDigit: return "digit";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text,
                            const TokenizerOptions& options) {
  using unicode::CharClass;
  const std::u32string in = utf8::decode(text);
  std::vector<Token> tokens;
  std::string run;
  TokenKind run_kind = TokenKind::kWord;
  bool in_run = false;

  auto flush = [&] {
    if (in_run) tokens.push_back({std::move(run), run_kind});
    run.clear();
    in_run = false;
  };
  auto single = [&](char32_t cp, TokenKind kind) {
    flush();
    std::string s;
    utf8::append(s, cp);
    tokens.push_back({std::move(s), kind});
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    const char32_t cp = in[i];
    CharClass cls = unicode::classify(cp);
    if (cls == CharClass::kJoiner && options.split_on_zwnj &&
        cp == unicode::kZwnj) {
      single(cp, TokenKind::kPunctuation);
      continue;
    }
    switch (cls) {
      case CharClass::kWhitespace:
        flush();
        break;
      case CharClass::kLetter:
      case CharClass::kMark:
        if (in_run && run_kind != TokenKind::kWord) flush();
        in_run = true;
        run_kind = TokenKind::kWord;
        utf8::append(run, cp);
        break;
      case CharClass::kJoiner: {
        const bool next_letter =
            i + 1 < in.size() &&
            (unicode::classify(in[i + 1]) == CharClass::kLetter ||
             unicode::classify(in[i + 1]) == CharClass::kMark ||
             unicode::classify(in[i + 1]) == CharClass::kJoiner);
        if (in_run && run_kind == TokenKind::kWord) {
          utf8::append(run, cp);
        } else if (next_letter) {
          flush();
          in_run = true;
          run_kind = TokenKind::kWord;
          utf8::append(run, cp);
        } else {
          single(cp, TokenKind::kPunctuation);
        }
        break;
      }
      case CharClass::kDigit:
        if (in_run && run_kind != TokenKind::kDigit) flush();
        in_run = true;
        run_kind = TokenKind::kDigit;
        utf8::append(run, cp);
        break;
      case CharClass::kOther:
        single(cp, TokenKind::kPunctuation);
        break;
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
  const std::u32string in = utf8::decode(text);
  std::vector<std::string> out;
  std::u32string current;
  auto emit = [&] {
    std::size_t b = 0, e = current.size();
    while (b < e && unicode::is_whitespace(current[b])) ++b;
    while (e > b && unicode::is_whitespace(current[e - 1])) --e;
    if (e > b) out.push_back(utf8::encode(current.substr(b, e - b)));
    current.clear();
  };
  auto terminal = [](char32_t c) {
    return c == U'.' || c == U'!' || c == U'?' || c == 0x061F ||
           c == 0x06D4 || c == 0x2026;
  };
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char32_t c = in[i];
    if (c == U'\n' || c == U'\r' || c == 0x2029) {
      emit();
      continue;
    }
    current.push_back(c);
    if (terminal(c)) {
      while (i + 1 < in.size() && terminal(in[i + 1])) current.push_back(in[++i]);
      if (i + 1 == in.size() || unicode::is_whitespace(in[i + 1])) emit();
    }
  }
  emit();
  return out;
}

}  // namespace kurdtk
