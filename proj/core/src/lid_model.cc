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

#include "kurdtk/lid_model.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "kurdtk/error.h"
#include "kurdtk/lid_features.h"
#include "kurdtk/lid_math.h"

namespace kurdtk {

void LidHyperparams::validate() const {
  if (embedding_dim < 1) throw InvalidArgument("embedding_dim must be >= 1");
  if (ngram_min < 1 || ngram_min > ngram_max) {
    throw InvalidArgument("need 1 <= ngram_min <= ngram_max");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning_rate must be positive");
  }
  if (bucket_count < 1) throw InvalidArgument("bucket_count must be >= 1");
}

std::string_view to_string(LabelScheme scheme) {
  switch (scheme) {
    case LabelScheme::kLanguageOnly: return "language-only";
    case LabelScheme::kLanguageAndScript: return "language-and-script";
  }
  return "?";
}

LabelScheme parse_label_scheme(std::string_view text) {
  if (text == "language-only") return LabelScheme::kLanguageOnly;
  if (text == "language-and-script") return LabelScheme::kLanguageAndScript;
  throw ParseError("unknown label scheme '" + std::string(text) + "'");
}

bool matches_scheme(const Label& label, LabelScheme scheme) {
  return label.script.has_value() ==
         (scheme == LabelScheme::kLanguageAndScript);
}

Label aggregate_label(const Label& label, LabelScheme scheme) {
  if (scheme == LabelScheme::kLanguageOnly) return {label.language, {}};
  if (!label.script) {
    throw MissingScript("label '" + label.to_string() +
                        "' has no script under language-and-script");
  }
  return label;
}

WordVocab::WordVocab(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

long WordVocab::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

void LidModel::allocate() {
  input_embeddings.assign(input_rows() * dim(), 0.0f);
  output_weights.assign(labels.size() * dim(), 0.0f);
}

void LidModel::validate() const {
  try {
    hyper.validate();
  } catch (const InvalidArgument& e) {
    throw InvalidModel(e.what());
  }
  if (labels.empty()) throw InvalidModel("model has no labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!matches_scheme(labels[i], scheme)) {
      throw InvalidModel("label " + labels[i].to_string() +
                         " does not match scheme " +
                         std::string(to_string(scheme)));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) {
        throw InvalidModel("duplicate label " + labels[i].to_string());
      }
    }
  }
  if (input_embeddings.size() != input_rows() * dim() ||
      output_weights.size() != labels.size() * dim()) {
    throw InvalidModel("matrix shape does not match hyperparameters");
  }
  auto finite = [](float v) { return std::isfinite(v); };
  if (!std::all_of(input_embeddings.begin(), input_embeddings.end(), finite) ||
      !std::all_of(output_weights.begin(), output_weights.end(), finite)) {
    throw InvalidModel("model contains non-finite weights");
  }
}

long LidModel::label_index(const Label& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<long>(it - labels.begin());
}

namespace {

constexpr char kMagic[8] = {'K', 'T', 'L', 'I', 'D', 'M', 'D', 'L'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
T to_le(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return v;
}

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  template <typename T>
  void put(T v) {
    v = to_le(v);
    out_.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  void put_string(const std::string& s) {
    put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void put_floats(const std::vector<float>& v) {
    if constexpr (std::endian::native == std::endian::little) {
      out_.write(reinterpret_cast<const char*>(v.data()),
                 static_cast<std::streamsize>(v.size() * sizeof(float)));
    } else {
      for (float f : v) put(f);
    }
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  template <typename T>
  T get() {
    T v;
    if (!in_.read(reinterpret_cast<char*>(&v), sizeof v)) {
      throw InvalidModel("model file is truncated");
    }
    return to_le(v);
  }
  std::string get_string() {
    const auto n = get<std::uint32_t>();
    if (n > (1u << 20)) throw InvalidModel("implausible string length");
    std::string s(n, '\0');
    if (n > 0 && !in_.read(s.data(), n)) {
      throw InvalidModel("model file is truncated");
    }
    return s;
  }
  void get_floats(std::vector<float>& v) {
    if (!in_.read(reinterpret_cast<char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(float)))) {
      throw InvalidModel("model file is truncated");
    }
    if constexpr (std::endian::native == std::endian::big) {
      for (float& f : v) f = to_le(f);
    }
  }

 private:
  std::istream& in_;
};

}  // namespace

void save_model(const LidModel& model, std::ostream& out) {
  model.validate();
  Writer w(out);
  out.write(kMagic, sizeof kMagic);
  w.put<std::uint32_t>(kVersion);
  const LidHyperparams& h = model.hyper;
  w.put<std::uint32_t>(h.embedding_dim);
  w.put<std::uint32_t>(h.ngram_min);
  w.put<std::uint32_t>(h.ngram_max);
  w.put<std::uint32_t>(h.epochs);
  w.put<double>(h.learning_rate);
  w.put<std::uint64_t>(h.bucket_count);
  w.put<std::uint8_t>(h.include_word_unigrams ? 1 : 0);
  w.put<std::uint64_t>(h.seed);
  w.put<std::uint8_t>(model.scheme == LabelScheme::kLanguageAndScript ? 1 : 0);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(model.labels.size()));
  for (const Label& l : model.labels) w.put_string(l.to_string());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(model.word_vocab.size()));
  for (const std::string& word : model.word_vocab.words()) w.put_string(word);
  w.put_floats(model.input_embeddings);
  w.put_floats(model.output_weights);
  if (!out) throw IoError("failed to write model");
}

void save_model(const LidModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  save_model(model, out);
  out.close();
  if (!out) throw IoError("failed to write " + path);
}

LidModel load_model(std::istream& in) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) ||
      std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw InvalidModel("not a kurdtk LID model");
  }
  Reader r(in);
  if (const auto v = r.get<std::uint32_t>(); v != kVersion) {
    throw InvalidModel("unsupported model version " + std::to_string(v));
  }
  LidModel m;
  m.hyper.embedding_dim = r.get<std::uint32_t>();
  m.hyper.ngram_min = r.get<std::uint32_t>();
  m.hyper.ngram_max = r.get<std::uint32_t>();
  m.hyper.epochs = r.get<std::uint32_t>();
  m.hyper.learning_rate = r.get<double>();
  m.hyper.bucket_count = r.get<std::uint64_t>();
  const auto unigrams = r.get<std::uint8_t>();
  m.hyper.seed = r.get<std::uint64_t>();
  const auto scheme = r.get<std::uint8_t>();
  if (unigrams > 1 || scheme > 1) throw InvalidModel("corrupt flag byte");
  m.hyper.include_word_unigrams = unigrams == 1;
  m.scheme = scheme == 1 ? LabelScheme::kLanguageAndScript
                         : LabelScheme::kLanguageOnly;
  try {
    m.hyper.validate();
  } catch (const InvalidArgument& e) {
    throw InvalidModel(e.what());
  }
  const auto n_labels = r.get<std::uint32_t>();
  if (n_labels > 4096) throw InvalidModel("implausible label count");
  for (std::uint32_t i = 0; i < n_labels; ++i) {
    try {
      m.labels.push_back(Label::parse(r.get_string()));
    } catch (const ParseError& e) {
      throw InvalidModel(e.what());
    }
  }
  const auto n_words = r.get<std::uint32_t>();
  std::vector<std::string> words;
  words.reserve(n_words);
  for (std::uint32_t i = 0; i < n_words; ++i) words.push_back(r.get_string());
  if (!std::is_sorted(words.begin(), words.end()) ||
      std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw InvalidModel("word vocabulary is not sorted and unique");
  }
  m.word_vocab = WordVocab(std::move(words));
  m.allocate();
  r.get_floats(m.input_embeddings);
  r.get_floats(m.output_weights);
  if (in.peek() != std::char_traits<char>::eof()) {
    throw InvalidModel("trailing bytes after model");
  }
  m.validate();
  return m;
}

LidModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path);
  return load_model(in);
}

std::vector<double> score(const LidModel& model, std::string_view sentence) {
  const std::vector<std::uint64_t> features =
      featurize(sentence, model.hyper, model.word_vocab);
  const std::size_t dim = model.dim();
  std::vector<double> h(dim), z(model.labels.size());
  lid_math::hidden<float>(model.input_embeddings, dim, features, h);
  lid_math::logits<float>(model.output_weights, dim, h, z);
  lid_math::softmax(z);
  return z;
}

Prediction predict(const LidModel& model, std::string_view sentence,
                   std::size_t k) {
  if (k == 0) throw InvalidArgument("predict: k must be at least 1");
  const std::vector<double> p = score(model, sentence);
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  Prediction out;
  for (std::size_t i = 0; i < order.size() && i < k; ++i) {
    out.ranked.emplace_back(model.labels[order[i]], p[order[i]]);
  }
  return out;
}

}  // namespace kurdtk
