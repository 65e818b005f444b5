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

#include "kurdtk/label.h"

#include "kurdtk/error.h"

namespace kurdtk {

std::string_view to_string(LanguageCode code) {
  switch (code) {
    case LanguageCode::kmr: return "kmr";
    case LanguageCode::ckb: return "ckb";
    case LanguageCode::sdh: return "sdh";
    case LanguageCode::hac: return "hac";
    case LanguageCode::zza: return "zza";
    case LanguageCode::lki: return "lki";
    case LanguageCode::ar: return "ar";
    case LanguageCode::fa: return "fa";
    case LanguageCode::tr: return "tr";
  }
  return "?";
}

std::string_view to_string(ScriptCode code) {
  switch (code) {
    case ScriptCode::arab: return "arab";
    case ScriptCode::arab_fa: return "arab-fa";
    case ScriptCode::latn: return "latn";
    case ScriptCode::latn_wiki: return "latn-wiki";
    case ScriptCode::unknown: return "unknown";
  }
  return "?";
}

LanguageCode parse_language(std::string_view text) {
  for (LanguageCode code : kAllLanguages) {
    if (to_string(code) == text) return code;
  }
  throw ParseError("unknown language code '" + std::string(text) + "'");
}

ScriptCode parse_script(std::string_view text) {
  for (ScriptCode code : {ScriptCode::arab, ScriptCode::arab_fa,
                          ScriptCode::latn, ScriptCode::latn_wiki,
                          ScriptCode::unknown}) {
    if (to_string(code) == text) return code;
  }
  throw ParseError("unknown script code '" + std::string(text) + "'");
}

std::string Label::to_string() const {
  std::string out(kurdtk::to_string(language));
  if (script) {
    out += '-';
    out += kurdtk::to_string(*script);
  }
  return out;
}

Label Label::parse(std::string_view text) {
  for (LanguageCode code : kAllLanguages) {
    const std::string_view lang = kurdtk::to_string(code);
    if (!text.starts_with(lang)) continue;
    std::string_view rest = text.substr(lang.size());
    if (rest.empty()) return Label{code, std::nullopt};
    if (rest.front() == '-') rest.remove_prefix(1);
    for (ScriptCode script : kLabelScripts) {
      if (rest == kurdtk::to_string(script)) return Label{code, script};
    }
  }
  throw ParseError("cannot parse label '" + std::string(text) + "'");
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = a.language <=> b.language; c != 0) return c;
  // Script-less labels sort before scripted ones.
  if (a.script.has_value() != b.script.has_value()) {
    return a.script.has_value() ? std::strong_ordering::greater
                                : std::strong_ordering::less;
  }
  if (!a.script) return std::strong_ordering::equal;
  return *a.script <=> *b.script;
}

}  // namespace kurdtk
