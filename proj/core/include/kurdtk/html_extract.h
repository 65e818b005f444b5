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

#ifndef KURDTK_HTML_EXTRACT_H_
#define KURDTK_HTML_EXTRACT_H_

#include <string_view>

#include "kurdtk/corpus.h"

namespace kurdtk {

// Visible-text extraction from a saved article page. Tolerates malformed
// markup and invalid UTF-8 (replaced by U+FFFD).
//
// Text: content of <article> elements when the page has any, else of the
// whole page, minus script, style, noscript, template, svg, nav, footer,
// aside, form, iframe, button, select and head. Block elements and <br>
// end a line; whitespace inside a line is collapsed and empty lines are
// dropped. Character references are decoded.
//
// title: <title>, else the first h1-h6. topic: <meta> article:section,
// section, category or topic. date: <meta> article:published_time, date,
// pubdate, publishdate, dc.date or dc.date.issued, else the first
// <time datetime>, cut to YYYY-MM-DD and dropped unless valid.
// id: "doc-" + hex FNV-1a of source, a newline and the page bytes.
//
// Throws EmptyExtraction when no visible text remains.
Document extract_article(std::string_view html, std::string_view source);

}  // namespace kurdtk

#endif  // KURDTK_HTML_EXTRACT_H_
