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

#include "lrlprep/align_kernel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrlprep/error.h"

namespace lrlprep {
namespace {

using Real = long double;
using RealVector = std::vector<Real>;

// A single coordinate nudged by `delta`. The nudge is added to coordinate
// differences in extended precision, so (x - x) + delta is exact.
struct Perturbation {
  std::size_t pair;
  bool on_target;
  std::size_t row;
  std::size_t col;
  Real delta;
};

constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

// |a - b|^2 with `delta` added to a[col].
Real squared_distance(std::span<const double> a, std::span<const double> b,
                      std::size_t col = kNoColumn, Real delta = 0) {
  Real s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Real d = static_cast<Real>(a[k]) - b[k];
    if (k == col) d += delta;
    s += d * d;
  }
  return s;
}

Real dot(const RealVector& a, const RealVector& b) {
  Real s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::size_t perturbed_col(const Perturbation* pert, std::size_t pair,
                          bool target, std::size_t row) {
  if (pert != nullptr && pert->pair == pair && pert->on_target == target &&
      pert->row == row) {
    return pert->col;
  }
  return kNoColumn;
}

RealVector load_row(std::span<const double> row, std::size_t col, Real delta) {
  RealVector v(row.begin(), row.end());
  if (col != kNoColumn) v[col] += delta;
  return v;
}

[[noreturn]] void fail(std::size_t pair, const std::string& what) {
  throw ValidationError("pair " + std::to_string(pair) + ": " + what);
}

void check_sequence(std::size_t pair, const char* name,
                    const EmbeddingSequence& seq) {
  for (double v : seq.data()) {
    if (!std::isfinite(v)) fail(pair, std::string(name) + " has a non-finite component");
  }
}

void check_reg_coefficient(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw PreconditionError("regularization coefficient must be finite and >= 0");
  }
}

Real reg_sum(std::span<const AlignedEmbeddingPair> batch,
             const Perturbation* pert = nullptr) {
  Real s = 0;
  for (std::size_t p = 0; p < batch.size(); ++p) {
    const auto& pair = batch[p];
    const Real delta = pert != nullptr ? pert->delta : 0;
    for (std::size_t j = 0; j < pair.src.size(); ++j) {
      s += squared_distance(pair.src.row(j), pair.src_ref.row(j),
                            perturbed_col(pert, p, false, j), delta);
    }
    for (std::size_t j = 0; j < pair.tgt.size(); ++j) {
      s += squared_distance(pair.tgt.row(j), pair.tgt_ref.row(j),
                            perturbed_col(pert, p, true, j), delta);
    }
  }
  return s;
}

std::vector<PairGradient> reg_grad(std::span<const AlignedEmbeddingPair> batch,
                                   double reg_coefficient) {
  std::vector<PairGradient> grads;
  grads.reserve(batch.size());
  const Real two_c = 2.0L * reg_coefficient;
  for (const auto& p : batch) {
    PairGradient g{EmbeddingSequence(p.src.size(), p.src.dim()),
                   EmbeddingSequence(p.tgt.size(), p.tgt.dim())};
    for (std::size_t i = 0; i < p.src.data().size(); ++i) {
      g.src.data()[i] = static_cast<double>(
          two_c * (static_cast<Real>(p.src.data()[i]) - p.src_ref.data()[i]));
    }
    for (std::size_t i = 0; i < p.tgt.data().size(); ++i) {
      g.tgt.data()[i] = static_cast<double>(
          two_c * (static_cast<Real>(p.tgt.data()[i]) - p.tgt_ref.data()[i]));
    }
    grads.push_back(std::move(g));
  }
  return grads;
}

Real mse_align_sum(std::span<const AlignedEmbeddingPair> batch,
                   const Perturbation* pert = nullptr) {
  Real s = 0;
  for (std::size_t p = 0; p < batch.size(); ++p) {
    const auto& pair = batch[p];
    for (std::size_t i = 0; i < pair.src_word_ends.size(); ++i) {
      const std::size_t sr = pair.src_word_ends[i];
      const std::size_t tr = pair.tgt_word_ends[i];
      const std::size_t scol = perturbed_col(pert, p, false, sr);
      const std::size_t tcol = perturbed_col(pert, p, true, tr);
      if (tcol != kNoColumn) {
        s += squared_distance(pair.tgt.row(tr), pair.src.row(sr), tcol, pert->delta);
      } else {
        s += squared_distance(pair.src.row(sr), pair.tgt.row(tr), scol,
                              scol != kNoColumn ? pert->delta : 0);
      }
    }
  }
  return s;
}

// One aligned word: where its source and target word-end vectors live.
struct WordLink {
  std::size_t pair;
  std::size_t src_pos;
  std::size_t tgt_pos;
};

std::vector<WordLink> gather_links(std::span<const AlignedEmbeddingPair> batch) {
  std::vector<WordLink> links;
  for (std::size_t p = 0; p < batch.size(); ++p) {
    for (std::size_t i = 0; i < batch[p].src_word_ends.size(); ++i) {
      links.push_back({p, batch[p].src_word_ends[i], batch[p].tgt_word_ends[i]});
    }
  }
  if (links.empty()) {
    throw PreconditionError("contrastive loss needs at least one aligned word");
  }
  return links;
}

struct ContrastiveTerms {
  std::vector<WordLink> links;
  std::vector<RealVector> u;  // source word-end vectors
  std::vector<RealVector> v;  // target word-end vectors
  std::vector<Real> u_norm;
  std::vector<Real> v_norm;
  std::vector<Real> cosine;  // N x N, row k = u_k against every v_m
  std::vector<Real> log_z;   // per-row log-partition of cosine / T
  Real loss = 0;
};

ContrastiveTerms contrastive_terms(std::span<const AlignedEmbeddingPair> batch,
                                   double temperature,
                                   const Perturbation* pert = nullptr) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw PreconditionError("temperature must be finite and > 0");
  }
  ContrastiveTerms t;
  t.links = gather_links(batch);
  const std::size_t n = t.links.size();
  const Real delta = pert != nullptr ? pert->delta : 0;
  for (const auto& l : t.links) {
    t.u.push_back(load_row(batch[l.pair].src.row(l.src_pos),
                           perturbed_col(pert, l.pair, false, l.src_pos), delta));
    t.v.push_back(load_row(batch[l.pair].tgt.row(l.tgt_pos),
                           perturbed_col(pert, l.pair, true, l.tgt_pos), delta));
    t.u_norm.push_back(std::sqrt(dot(t.u.back(), t.u.back())));
    t.v_norm.push_back(std::sqrt(dot(t.v.back(), t.v.back())));
    if (t.u_norm.back() == 0) {
      fail(l.pair, "zero source word-end vector at token " + std::to_string(l.src_pos));
    }
    if (t.v_norm.back() == 0) {
      fail(l.pair, "zero target word-end vector at token " + std::to_string(l.tgt_pos));
    }
  }
  t.cosine.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      t.cosine[k * n + m] = dot(t.u[k], t.v[m]) / (t.u_norm[k] * t.v_norm[m]);
    }
  }
  Real loss = 0;
  t.log_z.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real max_logit = -INFINITY;
    for (std::size_t m = 0; m < n; ++m) {
      max_logit = std::max(max_logit, t.cosine[k * n + m] / temperature);
    }
    Real z = 0;
    for (std::size_t m = 0; m < n; ++m) {
      z += std::exp(t.cosine[k * n + m] / temperature - max_logit);
    }
    t.log_z[k] = max_logit + std::log(z);
    loss += t.log_z[k] - t.cosine[k * n + k] / temperature;
  }
  t.loss = loss / static_cast<Real>(n);
  return t;
}

Real total_loss(std::span<const AlignedEmbeddingPair> batch,
                const ObjectiveConfig& config, const Perturbation* pert) {
  const Real reg = reg_sum(batch, pert);
  const Real align = config.kind == AlignmentObjective::kMse
                         ? mse_align_sum(batch, pert)
                         : contrastive_terms(batch, config.temperature, pert).loss;
  return align + static_cast<Real>(config.reg_coefficient) * reg;
}

LossReport make_report(Real align, Real reg, double reg_coefficient) {
  LossReport r;
  r.align_loss = static_cast<double>(align);
  r.reg_loss = static_cast<double>(reg);
  r.reg_coefficient = reg_coefficient;
  r.total = static_cast<double>(align + static_cast<Real>(reg_coefficient) * reg);
  return r;
}

}  // namespace

EmbeddingSequence::EmbeddingSequence(std::size_t dim, std::vector<double> data)
    : dim_(dim), data_(std::move(data)) {
  if (dim_ == 0 ? !data_.empty() : data_.size() % dim_ != 0) {
    throw PreconditionError("embedding data is not a whole number of rows");
  }
}

AlignmentObjective parse_objective(std::string_view name) {
  if (name == "mse") return AlignmentObjective::kMse;
  if (name == "contrastive" || name == "cstv") return AlignmentObjective::kContrastive;
  throw ValidationError("unknown loss '" + std::string(name) +
                        "' (expected mse or contrastive)");
}

void validate_batch(std::span<const AlignedEmbeddingPair> batch) {
  if (batch.empty()) throw PreconditionError("empty batch");
  for (std::size_t p = 0; p < batch.size(); ++p) {
    const auto& pair = batch[p];
    if (pair.src.dim() == 0 || pair.src.dim() != pair.tgt.dim()) {
      fail(p, "source dim " + std::to_string(pair.src.dim()) +
                  " and target dim " + std::to_string(pair.tgt.dim()) +
                  " must match and be positive");
    }
    if (!pair.src_ref.same_shape(pair.src)) fail(p, "source reference shape differs from source");
    if (!pair.tgt_ref.same_shape(pair.tgt)) fail(p, "target reference shape differs from target");
    if (pair.src_word_ends.size() != pair.tgt_word_ends.size()) {
      fail(p, std::to_string(pair.src_word_ends.size()) + " source words vs " +
                  std::to_string(pair.tgt_word_ends.size()) + " target words");
    }
    for (std::size_t e : pair.src_word_ends) {
      if (e >= pair.src.size()) {
        fail(p, "source word end " + std::to_string(e) + " out of range (" +
                    std::to_string(pair.src.size()) + " tokens)");
      }
    }
    for (std::size_t e : pair.tgt_word_ends) {
      if (e >= pair.tgt.size()) {
        fail(p, "target word end " + std::to_string(e) + " out of range (" +
                    std::to_string(pair.tgt.size()) + " tokens)");
      }
    }
    check_sequence(p, "source", pair.src);
    check_sequence(p, "target", pair.tgt);
    check_sequence(p, "source reference", pair.src_ref);
    check_sequence(p, "target reference", pair.tgt_ref);
  }
}

LossReport mse_alignment_loss(std::span<const AlignedEmbeddingPair> batch,
                              double reg_coefficient) {
  validate_batch(batch);
  check_reg_coefficient(reg_coefficient);
  return make_report(mse_align_sum(batch), reg_sum(batch), reg_coefficient);
}

std::vector<PairGradient> mse_alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, double reg_coefficient) {
  validate_batch(batch);
  check_reg_coefficient(reg_coefficient);
  auto grads = reg_grad(batch, reg_coefficient);
  for (std::size_t p = 0; p < batch.size(); ++p) {
    const auto& pair = batch[p];
    for (std::size_t i = 0; i < pair.src_word_ends.size(); ++i) {
      const auto u = pair.src.row(pair.src_word_ends[i]);
      const auto v = pair.tgt.row(pair.tgt_word_ends[i]);
      auto gu = grads[p].src.row(pair.src_word_ends[i]);
      auto gv = grads[p].tgt.row(pair.tgt_word_ends[i]);
      for (std::size_t k = 0; k < u.size(); ++k) {
        const Real d = 2.0L * (static_cast<Real>(u[k]) - v[k]);
        gu[k] = static_cast<double>(gu[k] + d);
        gv[k] = static_cast<double>(gv[k] - d);
      }
    }
  }
  return grads;
}

LossReport contrastive_alignment_loss(
    std::span<const AlignedEmbeddingPair> batch, double temperature,
    double reg_coefficient) {
  validate_batch(batch);
  check_reg_coefficient(reg_coefficient);
  return make_report(contrastive_terms(batch, temperature).loss, reg_sum(batch),
                     reg_coefficient);
}

std::vector<PairGradient> contrastive_alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, double temperature,
    double reg_coefficient) {
  validate_batch(batch);
  check_reg_coefficient(reg_coefficient);
  const ContrastiveTerms t = contrastive_terms(batch, temperature);
  auto grads = reg_grad(batch, reg_coefficient);
  const std::size_t n = t.links.size();
  const std::size_t dim = batch.front().src.dim();
  const Real temp = temperature;

  // dL/dcos(u_k, v_m) = (softmax_k(m) - [k == m]) / (N T)
  // dcos(u, v)/du = v / (|u||v|) - cos * u / |u|^2, and symmetrically for v.
  std::vector<RealVector> du(n, RealVector(dim, 0));
  std::vector<RealVector> dv(n, RealVector(dim, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      const Real cos = t.cosine[k * n + m];
      const Real prob = std::exp(cos / temp - t.log_z[k]);
      const Real c = (prob - (k == m ? 1.0L : 0.0L)) / (static_cast<Real>(n) * temp);
      const Real uv = t.u_norm[k] * t.v_norm[m];
      const Real uu = t.u_norm[k] * t.u_norm[k];
      const Real vv = t.v_norm[m] * t.v_norm[m];
      for (std::size_t d = 0; d < dim; ++d) {
        du[k][d] += c * (t.v[m][d] / uv - cos * t.u[k][d] / uu);
        dv[m][d] += c * (t.u[k][d] / uv - cos * t.v[m][d] / vv);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& l = t.links[k];
    auto gu = grads[l.pair].src.row(l.src_pos);
    auto gv = grads[l.pair].tgt.row(l.tgt_pos);
    for (std::size_t d = 0; d < dim; ++d) {
      gu[d] = static_cast<double>(gu[d] + du[k][d]);
      gv[d] = static_cast<double>(gv[d] + dv[k][d]);
    }
  }
  return grads;
}

LossReport alignment_loss(std::span<const AlignedEmbeddingPair> batch,
                          const ObjectiveConfig& config) {
  return config.kind == AlignmentObjective::kMse
             ? mse_alignment_loss(batch, config.reg_coefficient)
             : contrastive_alignment_loss(batch, config.temperature,
                                          config.reg_coefficient);
}

std::vector<PairGradient> alignment_grad(
    std::span<const AlignedEmbeddingPair> batch, const ObjectiveConfig& config) {
  return config.kind == AlignmentObjective::kMse
             ? mse_alignment_grad(batch, config.reg_coefficient)
             : contrastive_alignment_grad(batch, config.temperature,
                                          config.reg_coefficient);
}

double finite_difference_check(std::span<const AlignedEmbeddingPair> batch,
                               const ObjectiveConfig& config, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) {
    throw PreconditionError("finite-difference step must lie in (0, 1e-2]");
  }
  const auto analytic = alignment_grad(batch, config);

  double worst = 0.0;
  const auto probe = [&](std::size_t p, bool target, std::size_t flat, double g) {
    const std::size_t dim = batch[p].src.dim();
    Perturbation pert{p, target, flat / dim, flat % dim, epsilon};
    const Real plus = total_loss(batch, config, &pert);
    pert.delta = -static_cast<Real>(epsilon);
    const Real minus = total_loss(batch, config, &pert);
    const Real numeric = (plus - minus) / (2.0L * epsilon);
    const Real denom = std::max<Real>(
        1e-12L, std::fabs(static_cast<Real>(g)) + std::fabs(numeric));
    worst = std::max(worst, static_cast<double>(std::fabs(g - numeric) / denom));
  };
  for (std::size_t p = 0; p < batch.size(); ++p) {
    for (std::size_t i = 0; i < batch[p].src.data().size(); ++i) {
      probe(p, false, i, analytic[p].src.data()[i]);
    }
    for (std::size_t i = 0; i < batch[p].tgt.data().size(); ++i) {
      probe(p, true, i, analytic[p].tgt.data()[i]);
    }
  }
  return worst;
}

double finite_difference_check(std::span<const AlignedEmbeddingPair> batch,
                               double reg_coefficient, double epsilon) {
  return finite_difference_check(
      batch, ObjectiveConfig{AlignmentObjective::kMse, reg_coefficient, 0.1},
      epsilon);
}

}  // namespace lrlprep
