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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lrlprep/error.h"
#include "oracles.h"

namespace lrlprep {
namespace {

using testing::corpus_of;

TEST(WordOverlap, HalfShared) {
  const auto r = word_overlap(corpus_of({"a b", "c d a"}), corpus_of({"b d e"}));
  EXPECT_EQ(r.common_distinct, 2u);
  EXPECT_EQ(r.lrl_distinct, 4u);
  EXPECT_DOUBLE_EQ(r.percent, 50.0);
  EXPECT_EQ(format_overlap(r), "overlap: common=2 lrl_distinct=4 percent=50.0000");
}

TEST(WordOverlap, IdenticalAndDisjoint) {
  EXPECT_DOUBLE_EQ(word_overlap(corpus_of({"a b"}), corpus_of({"a b"})).percent, 100.0);
  EXPECT_DOUBLE_EQ(word_overlap(corpus_of({"a b"}), corpus_of({"c"})).percent, 0.0);
}

TEST(WordOverlap, EmptyLrlIsPreconditionError) {
  EXPECT_THROW(word_overlap(Corpus{}, corpus_of({"a"})), PreconditionError);
}

TEST(WordOverlapProperty, BoundsAndMonotonicity) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> w(0, 30);
  const auto line = [&] {
    std::string s;
    for (int i = 0; i < 5; ++i) s += "w" + std::to_string(w(rng)) + " ";
    return s;
  };
  for (int t = 0; t < 200; ++t) {
    std::vector<std::string> lrl = {line(), line()};
    std::vector<std::string> rpl = {line()};
    const auto base = word_overlap(corpus_of(lrl), corpus_of(rpl));
    const auto [common, distinct] = testing::oracle_overlap(lrl, rpl);
    ASSERT_EQ(base.common_distinct, common);
    ASSERT_EQ(base.lrl_distinct, distinct);
    ASSERT_GE(base.percent, 0.0);
    ASSERT_LE(base.percent, 100.0);
    rpl.push_back(line());
    ASSERT_GE(word_overlap(corpus_of(lrl), corpus_of(rpl)).percent, base.percent);
    lrl.push_back("novel" + std::to_string(t));
    ASSERT_LE(word_overlap(corpus_of(lrl), corpus_of(rpl)).common_distinct,
              word_overlap(corpus_of({lrl[0], lrl[1]}), corpus_of(rpl)).common_distinct);
  }
}

TEST(CorpusBleu, Identity) {
  const auto c = corpus_of({"the cat sat on the mat", "a b c d e f"});
  const auto r = corpus_bleu(c, c);
  EXPECT_EQ(r.score, 100.0);
  EXPECT_EQ(r.brevity_penalty, 1.0);
  for (double p : r.precisions) EXPECT_EQ(p, 1.0);
}

TEST(CorpusBleu, BrevityPenaltyCase) {
  const auto r = corpus_bleu(corpus_of({"a b c d"}), corpus_of({"a b c d e"}));
  for (double p : r.precisions) EXPECT_EQ(p, 1.0);
  EXPECT_NEAR(r.brevity_penalty, std::exp(1.0 - 5.0 / 4.0), 1e-15);
  EXPECT_NEAR(r.score, 77.88, 0.01);
}

TEST(CorpusBleu, ZeroPrecisionIsZero) {
  EXPECT_EQ(corpus_bleu(corpus_of({"x x x x"}), corpus_of({"a b c d"})).score, 0.0);
  // No 4-grams at all in the hypothesis.
  EXPECT_EQ(corpus_bleu(corpus_of({"a b c"}), corpus_of({"a b c"})).score, 0.0);
}

TEST(CorpusBleu, LineCountMismatch) {
  EXPECT_THROW(corpus_bleu(corpus_of({"a"}), corpus_of({"a", "b"})),
               PreconditionError);
}

TEST(CorpusBleuProperty, MatchesOracleAndSelfScore) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> w(0, 5);
  std::uniform_int_distribution<int> len(4, 12);
  const auto line = [&] {
    std::string s;
    for (int i = len(rng); i > 0; --i) s += std::string(1, 'a' + w(rng)) + " ";
    return s;
  };
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> h, r;
    for (int i = 0; i < 4; ++i) {
      h.push_back(line());
      r.push_back(line());
    }
    const double got = corpus_bleu(corpus_of(h), corpus_of(r)).score;
    ASSERT_NEAR(got, testing::oracle_bleu(h, r), 1e-9);
    ASSERT_EQ(corpus_bleu(corpus_of(h), corpus_of(h)).score, 100.0);

    // Replacing a hypothesis word that the reference lacks with the
    // reference word at that position never lowers p1. Without the first
    // condition clipping can lower it: "a y" vs "y a" goes from 2 to 1.
    auto hw = testing::split_ws(h[0]);
    const auto rw = testing::split_ws(r[0]);
    const std::size_t pos = t % std::min(hw.size(), rw.size());
    if (std::find(rw.begin(), rw.end(), hw[pos]) != rw.end()) continue;
    const double p1 = corpus_bleu(corpus_of(h), corpus_of(r)).precisions[0];
    hw[pos] = rw[pos];
    std::string fixed;
    for (const auto& x : hw) fixed += x + " ";
    auto h2 = h;
    h2[0] = fixed;
    ASSERT_GE(corpus_bleu(corpus_of(h2), corpus_of(r)).precisions[0], p1);
  }
}

}  // namespace
}  // namespace lrlprep
