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

#ifndef KURDTK_LID_MATH_H_
#define KURDTK_LID_MATH_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Forward and backward pass of the averaged-embedding softmax classifier,
// templated on the storage type. Sums are carried in double for both
// storage types.
namespace kurdtk::lid_math {

// h = mean of input rows listed in `features` (zero when empty).
template <typename Real>
void hidden(std::span<const Real> input, std::size_t dim,
            std::span<const std::uint64_t> features, std::span<double> h) {
  std::fill(h.begin(), h.end(), 0.0);
  if (features.empty()) return;
  for (std::uint64_t f : features) {
    const Real* row = input.data() + f * dim;
    for (std::size_t j = 0; j < dim; ++j) h[j] += static_cast<double>(row[j]);
  }
  const double inv = 1.0 / static_cast<double>(features.size());
  for (double& v : h) v *= inv;
}

// logits = output * h.
template <typename Real>
void logits(std::span<const Real> output, std::size_t dim,
            std::span<const double> h, std::span<double> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Real* row = output.data() + k * dim;
    double s = 0.0;
    for (std::size_t j = 0; j < dim; ++j) s += static_cast<double>(row[j]) * h[j];
    out[k] = s;
  }
}

// In-place softmax with max subtraction; returns log-sum-exp of the input.
inline double softmax(std::span<double> z) {
  const double m = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return m + std::log(sum);
}

// Negative log-likelihood of `target`.
template <typename Real>
double loss(std::span<const Real> input, std::span<const Real> output,
            std::size_t dim, std::size_t labels,
            std::span<const std::uint64_t> features, std::size_t target) {
  std::vector<double> h(dim), z(labels);
  hidden<Real>(input, dim, features, h);
  logits<Real>(output, dim, h, z);
  const double target_logit = z[target];
  return softmax(z) - target_logit;
}

struct Gradient {
  double loss = 0.0;
  std::vector<double> hidden;       // dim
  std::vector<double> probs;        // labels
  std::vector<double> grad_output;  // labels x dim
  std::vector<double> grad_hidden;  // dim; input row f gets
                                    // count(f) / |features| of this
};

template <typename Real>
void gradient(std::span<const Real> input, std::span<const Real> output,
              std::size_t dim, std::size_t labels,
              std::span<const std::uint64_t> features, std::size_t target,
              Gradient& g) {
  g.hidden.assign(dim, 0.0);
  g.probs.assign(labels, 0.0);
  g.grad_output.assign(labels * dim, 0.0);
  g.grad_hidden.assign(dim, 0.0);
  hidden<Real>(input, dim, features, g.hidden);
  logits<Real>(output, dim, g.hidden, g.probs);
  const double target_logit = g.probs[target];
  g.loss = softmax(g.probs) - target_logit;
  for (std::size_t k = 0; k < labels; ++k) {
    const double dz = g.probs[k] - (k == target ? 1.0 : 0.0);
    const Real* row = output.data() + k * dim;
    double* grow = g.grad_output.data() + k * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      grow[j] = dz * g.hidden[j];
      g.grad_hidden[j] += dz * static_cast<double>(row[j]);
    }
  }
}

// One SGD step with learning rate `lr`; returns the pre-update loss.
template <typename Real>
double sgd_step(std::span<Real> input, std::span<Real> output, std::size_t dim,
                std::size_t labels, std::span<const std::uint64_t> features,
                std::size_t target, double lr, Gradient& scratch) {
  gradient<Real>(input, output, dim, labels, features, target, scratch);
  for (std::size_t i = 0; i < labels * dim; ++i) {
    output[i] = static_cast<Real>(static_cast<double>(output[i]) -
                                  lr * scratch.grad_output[i]);
  }
  if (!features.empty()) {
    const double scale = lr / static_cast<double>(features.size());
    for (std::uint64_t f : features) {
      Real* row = input.data() + f * dim;
      for (std::size_t j = 0; j < dim; ++j) {
        row[j] = static_cast<Real>(static_cast<double>(row[j]) -
                                   scale * scratch.grad_hidden[j]);
      }
    }
  }
  return scratch.loss;
}

}  // namespace kurdtk::lid_math

#endif  // KURDTK_LID_MATH_H_
