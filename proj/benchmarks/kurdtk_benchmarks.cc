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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "kurdtk/data_paths.h"
#include "kurdtk/lid_features.h"
#include "kurdtk/lid_model.h"
#include "kurdtk/normalize.h"
#include "kurdtk/rng.h"
#include "kurdtk/tokenize.h"
#include "kurdtk/translit.h"

namespace {

using namespace kurdtk;

const std::string kSorani =
    "ئەمڕۆ باران بە خوڕ بارى و خەڵک لە ماڵەوە مانەوە، پلەی گەرما ١٠ بوو. ";
const std::string kKurmanji =
    "Îro baran bi xurt barî û xelk li malê man, germahî 10 pile bû. ";

std::string repeat(const std::string& s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += s;
  return out;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = repeat(kSorani, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(1)->Arg(64);

void BM_UnifyEncoding(benchmark::State& state) {
  const auto table =
      NormalizationTable::load(data_file("normalize/encoding-unification.tsv"));
  const std::string text = repeat(kSorani, 64);
  for (auto _ : state) benchmark::DoNotOptimize(unify_encoding(text, table));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_UnifyEncoding);

void BM_ArabToLatin(benchmark::State& state) {
  const auto rules = RuleTable::load(data_file("translit/arab-latn.tsv"));
  const std::string text = repeat(kSorani, 64);
  for (auto _ : state) benchmark::DoNotOptimize(arab_to_latin(text, rules));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ArabToLatin);

void BM_Featurize(benchmark::State& state) {
  const LidHyperparams hyper;
  const WordVocab vocab({"baran", "bi", "xurt"});
  for (auto _ : state) benchmark::DoNotOptimize(featurize(kKurmanji, hyper, vocab));
}
BENCHMARK(BM_Featurize);

void BM_Score(benchmark::State& state) {
  LidModel m;
  m.hyper.bucket_count = 1 << 16;
  m.scheme = LabelScheme::kLanguageAndScript;
  for (const char* l : {"kmr-latn", "kmr-arab", "ckb-arab", "ckb-latn", "zza-latn-wiki",
                        "ar-arab", "fa-arab", "tr-latn"}) {
    m.labels.push_back(Label::parse(l));
  }
  m.allocate();
  SplitMix64 rng(1);
  for (float& v : m.input_embeddings) v = static_cast<float>(rng.unit() - 0.5);
  for (float& v : m.output_weights) v = static_cast<float>(rng.unit() - 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(score(m, kKurmanji));
}
BENCHMARK(BM_Score);

}  // namespace

BENCHMARK_MAIN();
