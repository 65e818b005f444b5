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

#include "kurdtk/dataset.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <unordered_set>

#include "kurdtk/error.h"
#include "kurdtk/rng.h"

namespace kurdtk {

LidSplit build_lid_dataset(
    const std::map<Label, std::vector<std::string>>& corpora,
    const DatasetOptions& options) {
  if (!(options.test_fraction > 0.0 && options.test_fraction < 1.0)) {
    throw InvalidArgument("test_fraction must lie in (0, 1)");
  }
  LidSplit split;
  for (const auto& [label, sentences] : corpora) {
    std::size_t n = options.n_per_label;
    if (auto it = options.per_label.find(label);
        it != options.per_label.end()) {
      n = it->second;
    }
    if (n == 0) throw InvalidArgument("sample size must be positive");

    std::vector<const std::string*> pool;
    std::unordered_set<std::string_view> seen;
    for (const std::string& s : sentences) {
      if (seen.insert(s).second) pool.push_back(&s);
    }
    const std::string name = label.to_string();
    if (pool.size() < n) throw InsufficientData(name, pool.size(), n);

    SplitMix64 rng(options.seed ^ fnv1a64(name));
    rng.shuffle(std::span<const std::string*>(pool));

    std::size_t n_test = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * options.test_fraction));
    n_test = std::clamp<std::size_t>(n_test, 1, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& out = i < n_test ? split.test : split.train;
      out.push_back({*pool[i], label});
    }
  }
  return split;
}

LidSplit build_lid_dataset(
    const std::map<Label, std::vector<std::string>>& corpora,
    std::size_t n_per_label, double test_fraction, std::uint64_t seed) {
  DatasetOptions options;
  options.n_per_label = n_per_label;
  options.test_fraction = test_fraction;
  options.seed = seed;
  return build_lid_dataset(corpora, options);
}

std::map<Label, std::vector<std::string>> group_by_label(
    const std::vector<LabeledSentence>& sentences) {
  std::map<Label, std::vector<std::string>> out;
  for (const LabeledSentence& s : sentences) out[s.label].push_back(s.text);
  return out;
}

}  // namespace kurdtk
