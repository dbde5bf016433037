// Copyright 2026 The lrlprep Authors
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

// Alignment and regularization losses over contextual embeddings of
// word-by-word aligned sentence pairs.
//
// For a batch C of pairs (s, t) with word-end token positions l_s, l_t and
// frozen reference embeddings f0:
//
//   align = sum_(s,t) sum_i |f(s, l_s(i)) - f(t, l_t(i))|^2
//   reg   = sum_(s,t) ( sum_j |f(s,j) - f0(s,j)|^2 + sum_j |f(t,j) - f0(t,j)|^2 )
//   total = align + c * reg            (c = 1 gives the plain sum)
//
// Only word-final tokens take part in `align`; every token takes part in
// `reg`. The contrastive variant replaces `align` with an in-batch softmax
// over cosine similarities of all aligned word-end vectors (u_k, v_k):
//
//   align = -(1/N) sum_k log( exp(cos(u_k, v_k)/T) / sum_m exp(cos(u_k, v_m)/T) )
//
// Word-end indices address the plain token sequence; callers whose
// embeddings include sentence markers must shift the indices themselves.
// Sums are accumulated in long double.

#ifndef LRLPREP_ALIGN_KERNEL_H_
#define LRLPREP_ALIGN_KERNEL_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace lrlprep {

// Row-major (tokens x dim) matrix of per-token vectors.
class EmbeddingSequence {
 public:
  EmbeddingSequence() = default;
  EmbeddingSequence(std::size_t tokens, std::size_t dim, double fill = 0.0)
      : dim_(dim), data_(tokens * dim, fill) {}
  // Throws PreconditionError unless data.size() is a multiple of dim.
  EmbeddingSequence(std::size_t dim, std::vector<double> data);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }

  std::span<double> row(std::size_t j) {
    return {data_.data() + j * dim_, dim_};
  }
  std::span<const double> row(std::size_t j) const {
    return {data_.data() + j * dim_, dim_};
  }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const EmbeddingSequence& o) const {
    return dim_ == o.dim_ && data_.size() == o.data_.size();
  }

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct AlignedEmbeddingPair {
  EmbeddingSequence src;      // f(s, .)
  EmbeddingSequence tgt;      // f(t, .)
  EmbeddingSequence src_ref;  // f0(s, .)
  EmbeddingSequence tgt_ref;  // f0(t, .)
  std::vector<std::size_t> src_word_ends;
  std::vector<std::size_t> tgt_word_ends;
};

struct LossReport {
  double align_loss = 0.0;
  double reg_loss = 0.0;
  double total = 0.0;
  double reg_coefficient = 1.0;
};

// d(total)/d f(s, .) and d(total)/d f(t, .) for one pair.
struct PairGradient {
  EmbeddingSequence src;
  EmbeddingSequence tgt;
};

enum class AlignmentObjective { kMse, kContrastive };

AlignmentObjective parse_objective(std::string_view name);

struct ObjectiveConfig {
  AlignmentObjective kind = AlignmentObjective::kMse;
  double reg_coefficient = 1.0;
  double temperature = 0.1;  // contrastive only
};

// Throws PreconditionError on an empty batch and ValidationError, naming the
// pair index, on any shape violation or non-finite component.
void validate_batch(std::span<const AlignedEmbeddingPair> batch);

LossReport mse_alignment_loss(std::span<const AlignedEmbeddingPair> batch,
                              double reg_coefficient = 1.0);
std::vector<PairGradient> mse_alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, double reg_coefficient = 1.0);

// Throws PreconditionError when the batch has no aligned word or T <= 0, and
// ValidationError on a zero-norm word-end vector.
LossReport contrastive_alignment_loss(
    std::span<const AlignedEmbeddingPair> batch, double temperature = 0.1,
    double reg_coefficient = 1.0);
std::vector<PairGradient> contrastive_alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, double temperature = 0.1,
    double reg_coefficient = 1.0);

LossReport alignment_loss(std::span<const AlignedEmbeddingPair> batch,
                          const ObjectiveConfig& config);
std::vector<PairGradient> alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, const ObjectiveConfig& config);

// Max over every coordinate of f(s, .) and f(t, .) of
//   |analytic - numeric| / max(1e-12, |analytic| + |numeric|)
// with central differences of step `epsilon` in (0, 1e-2].
double finite_difference_check(std::span<const AlignedEmbeddingPair> batch,
                               const ObjectiveConfig& config, double epsilon);
double finite_difference_check(std::span<const AlignedEmbeddingPair> batch,
                               double reg_coefficient, double epsilon);

}  // namespace lrlprep

#endif  // LRLPREP_ALIGN_KERNEL_H_
