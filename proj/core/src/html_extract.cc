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

#include "kurdtk/html_extract.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kurdtk/error.h"
#include "kurdtk/rng.h"
#include "kurdtk/unicode.h"
#include "kurdtk/utf8.h"

namespace kurdtk {
namespace {

const std::unordered_set<std::string_view> kSkip = {
    "script", "style", "noscript", "template", "svg",    "nav",   "footer",
    "aside",  "form",  "iframe",   "button",   "select", "head"};

const std::unordered_set<std::string_view> kVoid = {
    "area", "base",  "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

const std::unordered_set<std::string_view> kBlock = {
    "p",       "div",     "br",     "h1",   "h2",         "h3",
    "h4",      "h5",      "h6",     "li",   "ul",         "ol",
    "section", "article", "header", "main", "blockquote", "pre",
    "tr",      "table",   "figure", "figcaption", "dd",   "dt",
    "dl",      "hr",      "address", "body", "html",      "title"};

const std::unordered_set<std::string_view> kRawText = {"script", "style",
                                                       "textarea"};

const std::unordered_map<std::string_view, char32_t> kEntities = {
    {"amp", U'&'},     {"lt", U'<'},       {"gt", U'>'},
    {"quot", U'"'},    {"apos", U'\''},    {"nbsp", 0xA0},
    {"zwnj", 0x200C},  {"zwj", 0x200D},    {"lrm", 0x200E},
    {"rlm", 0x200F},   {"ndash", 0x2013},  {"mdash", 0x2014},
    {"hellip", 0x2026}, {"laquo", 0xAB},   {"raquo", 0xBB},
    {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C},
    {"rdquo", 0x201D}, {"copy", 0xA9},     {"reg", 0xAE},
    {"middot", 0xB7},  {"bull", 0x2022},   {"shy", 0xAD}};

struct Tag {
  std::string name;  // lowercase, without '/'
  bool closing = false;
  bool self_closing = false;
  std::unordered_map<std::string, std::string> attrs;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

// Replaces bytes that do not form valid UTF-8 with U+FFFD.
std::string sanitize(std::string_view in) {
  if (utf8::is_valid(in)) return std::string(in);
  std::string out;
  std::size_t i = 0;
  while (i < in.size()) {
    const auto c = static_cast<unsigned char>(in[i]);
    std::size_t n = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3
                                 : (c >> 3) == 30 ? 4 : 0;
    if (n > 0 && i + n <= in.size() && utf8::is_valid(in.substr(i, n))) {
      out.append(in.substr(i, n));
      i += n;
    } else {
      utf8::append(out, 0xFFFD);
      ++i;
    }
  }
  return out;
}

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    const std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += s[i++];
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (!body.empty() && body[0] == '#') {
      const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
      const std::string digits(body.substr(hex ? 2 : 1));
      if (!digits.empty() &&
          std::all_of(digits.begin(), digits.end(), [&](char c) {
            return hex ? std::isxdigit(static_cast<unsigned char>(c))
                       : std::isdigit(static_cast<unsigned char>(c));
          })) {
        const unsigned long v = std::stoul(digits, nullptr, hex ? 16 : 10);
        if (v > 0 && v <= 0x10FFFF && !(v >= 0xD800 && v <= 0xDFFF)) {
          cp = static_cast<char32_t>(v);
        } else {
          cp = 0xFFFD;
        }
      }
    } else if (auto it = kEntities.find(lower(body)); it != kEntities.end()) {
      cp = it->second;
    }
    if (!cp) {
      out += s[i++];
      continue;
    }
    utf8::append(out, *cp);
    i = semi + 1;
  }
  return out;
}

// Collapses whitespace (including NBSP) to single spaces and trims.
std::string squash(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char32_t c : utf8::decode(s)) {
    if (unicode::is_whitespace(c) || c == 0xA0) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    utf8::append(out, c);
  }
  return out;
}

std::optional<Tag> parse_tag(std::string_view body) {
  // body is the text between '<' and '>'.
  Tag tag;
  std::size_t i = 0;
  if (i < body.size() && body[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t start = i;
  while (i < body.size() && !is_space(body[i]) && body[i] != '/') ++i;
  if (i == start) return std::nullopt;
  tag.name = lower(body.substr(start, i - start));
  if (!std::isalpha(static_cast<unsigned char>(tag.name[0]))) return std::nullopt;
  while (i < body.size()) {
    while (i < body.size() && (is_space(body[i]) || body[i] == '/')) {
      if (body[i] == '/' && i + 1 == body.size()) tag.self_closing = true;
      ++i;
    }
    const std::size_t ks = i;
    while (i < body.size() && !is_space(body[i]) && body[i] != '=' &&
           body[i] != '/')
      ++i;
    if (i == ks) {
      if (i < body.size()) ++i;
      continue;
    }
    std::string key = lower(body.substr(ks, i - ks));
    while (i < body.size() && is_space(body[i])) ++i;
    std::string value;
    if (i < body.size() && body[i] == '=') {
      ++i;
      while (i < body.size() && is_space(body[i])) ++i;
      if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
        const char q = body[i++];
        const std::size_t end = body.find(q, i);
        const std::size_t stop = end == std::string_view::npos ? body.size() : end;
        value = std::string(body.substr(i, stop - i));
        i = stop == body.size() ? stop : stop + 1;
      } else {
        const std::size_t vs = i;
        while (i < body.size() && !is_space(body[i])) ++i;
        value = std::string(body.substr(vs, i - vs));
      }
    }
    tag.attrs.emplace(std::move(key), decode_entities(value));
  }
  return tag;
}

std::optional<std::string> normalize_date(std::string_view raw) {
  const std::string s = squash(raw);
  if (s.size() < 10) return std::nullopt;
  const std::string day = s.substr(0, 10);
  if (is_iso8601_date(day)) return day;
  return std::nullopt;
}

class Extractor {
 public:
  explicit Extractor(std::string_view html) : html_(html) {}

  void run() {
    std::size_t i = 0;
    while (i < html_.size()) {
      if (html_[i] != '<') {
        const std::size_t next = html_.find('<', i);
        const std::size_t stop = next == std::string_view::npos ? html_.size() : next;
        text(html_.substr(i, stop - i));
        i = stop;
        continue;
      }
      if (html_.compare(i, 4, "<!--") == 0) {
        const std::size_t end = html_.find("-->", i + 4);
        i = end == std::string_view::npos ? html_.size() : end + 3;
        continue;
      }
      if (i + 1 < html_.size() && (html_[i + 1] == '!' || html_[i + 1] == '?')) {
        const std::size_t end = html_.find('>', i);
        i = end == std::string_view::npos ? html_.size() : end + 1;
        continue;
      }
      const std::size_t lt = i;
      const std::size_t end = find_tag_end(i + 1);
      if (end == std::string_view::npos) {
        text(html_.substr(i));
        break;
      }
      auto tag = parse_tag(html_.substr(i + 1, end - i - 1));
      if (!tag) {
        text("<");
        i = lt + 1;
        continue;
      }
      i = end + 1;
      i = handle(*tag, i);
    }
  }

  std::string body_text() const { return join(all_); }
  std::string article_text() const { return join(article_); }
  bool has_article() const { return saw_article_; }

  std::optional<std::string> title() const {
    if (!title_.empty()) return title_;
    if (!heading_.empty()) return heading_;
    return std::nullopt;
  }
  std::optional<std::string> topic() const { return topic_; }
  std::optional<std::string> date() const {
    if (meta_date_) return meta_date_;
    return time_date_;
  }

 private:
  std::size_t find_tag_end(std::size_t from) const {
    char quote = 0;
    for (std::size_t j = from; j < html_.size(); ++j) {
      const char c = html_[j];
      if (quote) {
        if (c == quote) quote = 0;
      } else if (c == '"' || c == '\'') {
        // Quotes only open inside attribute values.
        if (j > from && html_[j - 1] == '=') quote = c;
      } else if (c == '>') {
        return j;
      }
    }
    return std::string_view::npos;
  }

  std::size_t handle(const Tag& tag, std::size_t pos) {
    if (!tag.closing && kRawText.contains(tag.name)) {
      const std::string close = "</" + tag.name;
      std::size_t j = pos;
      for (;;) {
        j = find_ci(close, j);
        if (j == std::string_view::npos) return html_.size();
        const std::size_t after = j + close.size();
        if (after >= html_.size() || html_[after] == '>' || is_space(html_[after])) {
          const std::size_t end = html_.find('>', after);
          if (tag.name == "textarea" && skip_depth_ == 0) {
            text(html_.substr(pos, j - pos));
          }
          return end == std::string_view::npos ? html_.size() : end + 1;
        }
        j = after;
      }
    }
    if (tag.name == "title" && !tag.closing) {
      const std::size_t j = find_ci("</title", pos);
      const std::size_t stop = j == std::string_view::npos ? html_.size() : j;
      if (title_.empty()) title_ = squash(decode_entities(html_.substr(pos, stop - pos)));
      if (j == std::string_view::npos) return html_.size();
      const std::size_t end = html_.find('>', j);
      return end == std::string_view::npos ? html_.size() : end + 1;
    }
    if (tag.name == "meta" && !tag.closing) meta(tag);
    if (tag.name == "time" && !tag.closing && !time_date_) {
      if (auto it = tag.attrs.find("datetime"); it != tag.attrs.end()) {
        time_date_ = normalize_date(it->second);
      }
    }
    if (kSkip.contains(tag.name)) {
      if (!tag.closing && !tag.self_closing) {
        skip_stack_.push_back(tag.name);
        ++skip_depth_;
      } else if (tag.closing) {
        auto it = std::find(skip_stack_.rbegin(), skip_stack_.rend(), tag.name);
        if (it != skip_stack_.rend()) {
          skip_stack_.erase(std::next(it).base(), skip_stack_.end());
          skip_depth_ = skip_stack_.size();
        }
      }
      return pos;
    }
    if (tag.name == "article") {
      if (!tag.closing && !tag.self_closing) {
        ++article_depth_;
        saw_article_ = true;
      } else if (tag.closing && article_depth_ > 0) {
        --article_depth_;
      }
    }
    const bool heading = tag.name.size() == 2 && tag.name[0] == 'h' &&
                         tag.name[1] >= '1' && tag.name[1] <= '6';
    if (heading && skip_depth_ == 0) {
      if (!tag.closing) {
        in_heading_ = heading_.empty();
        heading_buf_.clear();
      } else if (in_heading_) {
        heading_ = squash(heading_buf_);
        in_heading_ = false;
      }
    }
    if (kBlock.contains(tag.name) || kVoid.contains(tag.name)) {
      if (kBlock.contains(tag.name)) newline();
    } else if (tag.name == "td" || tag.name == "th") {
      emit(" ");
    }
    return pos;
  }

  std::size_t find_ci(std::string_view needle, std::size_t from) const {
    for (std::size_t j = from; j + needle.size() <= html_.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < needle.size() && ok; ++k) {
        ok = std::tolower(static_cast<unsigned char>(html_[j + k])) == needle[k];
      }
      if (ok) return j;
    }
    return std::string_view::npos;
  }

  void meta(const Tag& tag) {
    std::string key;
    for (const char* attr : {"property", "name", "itemprop"}) {
      if (auto it = tag.attrs.find(attr); it != tag.attrs.end()) {
        key = lower(it->second);
        break;
      }
    }
    auto content = tag.attrs.find("content");
    if (key.empty() || content == tag.attrs.end()) return;
    const std::string value = squash(content->second);
    if (value.empty()) return;
    if (!topic_ && (key == "article:section" || key == "section" ||
                    key == "category" || key == "topic")) {
      topic_ = value;
    }
    if (!meta_date_ &&
        (key == "article:published_time" || key == "date" ||
         key == "pubdate" || key == "publishdate" || key == "dc.date" ||
         key == "dc.date.issued" || key == "datepublished")) {
      meta_date_ = normalize_date(value);
    }
  }

  void text(std::string_view raw) {
    if (raw.empty() || skip_depth_ > 0) return;
    const std::string decoded = decode_entities(raw);
    if (in_heading_) heading_buf_ += decoded;
    emit(decoded);
  }

  void emit(std::string_view s) {
    all_.back() += s;
    if (article_depth_ > 0) article_.back() += s;
  }

  void newline() {
    if (!all_.back().empty()) all_.emplace_back();
    if (article_depth_ > 0 && !article_.back().empty()) article_.emplace_back();
  }

  static std::string join(const std::vector<std::string>& lines) {
    std::string out;
    for (const std::string& line : lines) {
      const std::string s = squash(line);
      if (s.empty()) continue;
      if (!out.empty()) out += '\n';
      out += s;
    }
    return out;
  }

  std::string_view html_;
  std::vector<std::string> all_{std::string()};
  std::vector<std::string> article_{std::string()};
  std::vector<std::string> skip_stack_;
  std::size_t skip_depth_ = 0;
  std::size_t article_depth_ = 0;
  bool saw_article_ = false;
  bool in_heading_ = false;
  std::string heading_buf_;
  std::string heading_;
  std::string title_;
  std::optional<std::string> topic_;
  std::optional<std::string> meta_date_;
  std::optional<std::string> time_date_;
};

}  // namespace

Document extract_article(std::string_view html, std::string_view source) {
  const std::string clean = sanitize(html);
  Extractor ex(clean);
  ex.run();
  Document doc;
  std::string text = ex.has_article() ? ex.article_text() : std::string();
  if (text.empty()) text = ex.body_text();
  if (text.empty()) throw EmptyExtraction("no visible text in page");
  doc.text = std::move(text);
  doc.source = sanitize(source);
  doc.title = ex.title();
  doc.topic = ex.topic();
  doc.date = ex.date();
  std::string key(source);
  key += '\n';
  key.append(html);
  char id[24];
  std::snprintf(id, sizeof id, "doc-%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  doc.id = id;
  return doc;
}

}  // namespace kurdtk
