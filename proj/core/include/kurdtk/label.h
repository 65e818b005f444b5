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

#ifndef KURDTK_LABEL_H_
#define KURDTK_LABEL_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace kurdtk {

// ISO 639-3 (or 639-1 for the contact languages) codes of the varieties the
// toolkit knows about. Declaration order is the canonical label order.
enum class LanguageCode { kmr, ckb, sdh, hac, zza, lki, ar, fa, tr };

inline constexpr std::array<LanguageCode, 9> kAllLanguages = {
    LanguageCode::kmr, LanguageCode::ckb, LanguageCode::sdh,
    LanguageCode::hac, LanguageCode::zza, LanguageCode::lki,
    LanguageCode::ar,  LanguageCode::fa,  LanguageCode::tr};

// arab: Central Kurdish Perso-Arabic; arab_fa: Persian orthography;
// latn: Hawar/Bedirxan; latn_wiki: the Turkish-influenced Latin of the
// Zazaki Wikipedia. `unknown` is a detection outcome only.
enum class ScriptCode { arab, arab_fa, latn, latn_wiki, unknown };

inline constexpr std::array<ScriptCode, 4> kLabelScripts = {
    ScriptCode::arab, ScriptCode::arab_fa, ScriptCode::latn,
    ScriptCode::latn_wiki};

std::string_view to_string(LanguageCode code);
std::string_view to_string(ScriptCode code);

// Exact lowercase match against the closed sets; throws ParseError.
LanguageCode parse_language(std::string_view text);
ScriptCode parse_script(std::string_view text);

struct Label {
  LanguageCode language;
  std::optional<ScriptCode> script;

  // `ckb` or `ckb-arab`.
  std::string to_string() const;

  // Accepts `ckb`, `ckb-arab` and the concatenated `ckbarab`. A label never
  // carries the `unknown` script. Throws ParseError.
  static Label parse(std::string_view text);

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
};

}  // namespace kurdtk

#endif  // KURDTK_LABEL_H_
