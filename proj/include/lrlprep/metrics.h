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

#ifndef LRLPREP_METRICS_H_
#define LRLPREP_METRICS_H_

#include <array>
#include <cstdint>
#include <string>

#include "lrlprep/corpus.h"

namespace lrlprep {

struct OverlapResult {
  std::uint64_t common_distinct = 0;
  std::uint64_t lrl_distinct = 0;
  double percent = 0.0;
};

// Share of the transliterated LRL's distinct words that also occur in the
// RPL corpus. Throws PreconditionError when the LRL side has no words.
OverlapResult word_overlap(const Corpus& lrl_translit, const Corpus& rpl);

// Corpus-level BLEU-4: uniform weights, one reference, no smoothing.
struct BleuResult {
  std::array<double, 4> precisions{};
  std::array<std::uint64_t, 4> matches{};
  std::array<std::uint64_t, 4> totals{};
  double brevity_penalty = 1.0;
  double score = 0.0;
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;
};

// Sentences pair up by line index. Throws PreconditionError on a line-count
// mismatch or an empty hypothesis corpus.
BleuResult corpus_bleu(const Corpus& hypotheses, const Corpus& references);

// "overlap: common=<n> lrl_distinct=<n> percent=<x.xxxx>"
std::string format_overlap(const OverlapResult& r);
// "bleu: p1=<> p2=<> p3=<> p4=<> bp=<> score=<>", 4 decimals each.
std::string format_bleu(const BleuResult& r);

}  // namespace lrlprep

#endif  // LRLPREP_METRICS_H_
