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

#include "lrlprep/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_set>
#include <vector>

#include "lrlprep/error.h"

namespace lrlprep {
namespace {

std::unordered_set<std::string> distinct_words(const Corpus& corpus) {
  std::unordered_set<std::string> words;
  for (const auto& line : corpus.lines) {
    for (auto& w : tokenize_line(line).words) words.insert(std::move(w));
  }
  return words;
}

using NgramCounts = std::map<std::vector<std::string>, std::uint64_t>;

NgramCounts count_ngrams(const std::vector<std::string>& words, std::size_t n) {
  NgramCounts counts;
  if (words.size() < n) return counts;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    ++counts[std::vector<std::string>(words.begin() + i, words.begin() + i + n)];
  }
  return counts;
}

}  // namespace

OverlapResult word_overlap(const Corpus& lrl_translit, const Corpus& rpl) {
  const auto lrl = distinct_words(lrl_translit);
  if (lrl.empty()) {
    throw PreconditionError("LRL corpus has no words; overlap is undefined");
  }
  const auto rpl_words = distinct_words(rpl);
  OverlapResult r;
  r.lrl_distinct = lrl.size();
  for (const auto& w : lrl) {
    if (rpl_words.contains(w)) ++r.common_distinct;
  }
  r.percent = 100.0 * static_cast<double>(r.common_distinct) /
              static_cast<double>(r.lrl_distinct);
  return r;
}

BleuResult corpus_bleu(const Corpus& hypotheses, const Corpus& references) {
  if (hypotheses.lines.size() != references.lines.size()) {
    throw PreconditionError(
        "hypothesis and reference corpora differ in line count (" +
        std::to_string(hypotheses.lines.size()) + " vs " +
        std::to_string(references.lines.size()) + ")");
  }
  if (hypotheses.lines.empty()) {
    throw PreconditionError("hypothesis corpus is empty");
  }

  BleuResult r;
  for (std::size_t line = 0; line < hypotheses.lines.size(); ++line) {
    const auto hyp = tokenize_line(hypotheses.lines[line]).words;
    const auto ref = tokenize_line(references.lines[line]).words;
    r.hyp_length += hyp.size();
    r.ref_length += ref.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto hyp_counts = count_ngrams(hyp, n);
      const auto ref_counts = count_ngrams(ref, n);
      for (const auto& [gram, count] : hyp_counts) {
        r.totals[n - 1] += count;
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) r.matches[n - 1] += std::min(count, it->second);
      }
    }
  }
  if (r.hyp_length == 0) throw PreconditionError("hypothesis corpus has no words");

  bool any_zero = false;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    r.precisions[n] = r.totals[n] == 0
                          ? 0.0
                          : static_cast<double>(r.matches[n]) /
                                static_cast<double>(r.totals[n]);
    if (r.precisions[n] == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(r.precisions[n]);
    }
  }
  r.brevity_penalty =
      r.hyp_length >= r.ref_length
          ? 1.0
          : std::exp(1.0 - static_cast<double>(r.ref_length) /
                               static_cast<double>(r.hyp_length));
  r.score = any_zero ? 0.0 : 100.0 * r.brevity_penalty * std::exp(log_sum / 4.0);
  return r;
}

std::string format_overlap(const OverlapResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "overlap: common=%llu lrl_distinct=%llu percent=%.4f",
                static_cast<unsigned long long>(r.common_distinct),
                static_cast<unsigned long long>(r.lrl_distinct), r.percent);
  return buf;
}

std::string format_bleu(const BleuResult& r) {
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "bleu: p1=%.4f p2=%.4f p3=%.4f p4=%.4f bp=%.4f score=%.4f",
                r.precisions[0], r.precisions[1], r.precisions[2],
                r.precisions[3], r.brevity_penalty, r.score);
  return buf;
}

}  // namespace lrlprep
