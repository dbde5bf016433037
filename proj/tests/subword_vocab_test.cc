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

#include "lrlprep/subword_vocab.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "lrlprep/error.h"
#include "oracles.h"

namespace lrlprep {
namespace {

FrequencyTable table_of(const std::map<std::string, std::uint64_t>& m) {
  FrequencyTable f;
  for (const auto& [w, c] : m) {
    f.counts[w] = c;
    f.total += c;
  }
  return f;
}

std::string strip_and_join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.rfind("##", 0) == 0 ? t.substr(2) : t;
  return out;
}

const std::map<std::string, std::uint64_t> kClassic = {
    {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}};

TEST(TrainVocab, FirstMergeOnClassicTable) {
  const auto f = table_of(kClassic);
  const auto v = train_vocab(f, alphabet_size(f) + 1);
  ASSERT_EQ(v.merges().size(), 1u);
  EXPECT_EQ(v.merges()[0], (MergePair{"##e", "##s"}));
  EXPECT_TRUE(v.contains("##es"));
}

TEST(TrainVocab, AlphabetBudgetMeansNoMerges) {
  const auto f = table_of(kClassic);
  const auto v = train_vocab(f, alphabet_size(f));
  EXPECT_TRUE(v.merges().empty());
  EXPECT_EQ(v.size(), alphabet_size(f) + 1);
  EXPECT_EQ(v.tokens().front(), "[UNK]");
}

TEST(TrainVocab, SingleWordSingleMerge) {
  const auto f = table_of({{"aa", 1}});
  const auto v = train_vocab(f, alphabet_size(f) + 1, TrainOptions{1});
  EXPECT_EQ(v.tokens(), (std::vector<std::string>{"[UNK]", "##a", "a", "aa"}));
  EXPECT_EQ(v.merges(), (std::vector<MergePair>{{"a", "##a"}}));
  // With the default threshold a pair seen once is not merged.
  EXPECT_TRUE(train_vocab(f, alphabet_size(f) + 1).merges().empty());
}

TEST(TrainVocab, TargetBelowAlphabetStatesMinimum) {
  const auto f = table_of(kClassic);
  try {
    train_vocab(f, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(alphabet_size(f))),
              std::string::npos);
  }
  EXPECT_THROW(train_vocab(FrequencyTable{}, 5), PreconditionError);
}

TEST(TrainVocab, MatchesBruteForceOracle) {
  const std::vector<std::map<std::string, std::uint64_t>> tables = {
      kClassic,
      {{"banana", 3}, {"bandana", 2}, {"ban", 4}, {"nab", 1}, {"anna", 2}},
      {{"aaaa", 2}, {"abab", 3}, {"baba", 3}, {"ab", 1}, {"ba", 1}, {"aab", 2}},
  };
  for (const auto& m : tables) {
    const auto f = table_of(m);
    const auto v = train_vocab(f, alphabet_size(f) + 5);
    const auto want = testing::oracle_merges(m, 5);
    EXPECT_EQ(v.merges(), want);
  }
}

TEST(TrainVocab, Deterministic) {
  const auto f = table_of(kClassic);
  EXPECT_EQ(train_vocab(f, 20).tokens(), train_vocab(f, 20).tokens());
}

SubwordVocab toy_vocab() {
  return SubwordVocab({"[UNK]", "a", "##b", "##c", "d", "##e", "abc"}, {});
}

TEST(EncodeWords, WordEnds) {
  const SubwordVocab v({"[UNK]", "a", "##b", "##c", "d", "##e"}, {});
  const auto e = encode_words(std::vector<std::string>{"abc", "de"}, v);
  EXPECT_EQ(e.tokens, (std::vector<std::string>{"a", "##b", "##c", "d", "##e"}));
  EXPECT_EQ(e.word_end_indices, (std::vector<std::size_t>{2, 4}));
}

TEST(EncodeWords, WholeWordHit) {
  const auto e = encode_words(std::vector<std::string>{"de", "abc"}, toy_vocab());
  EXPECT_EQ(e.tokens, (std::vector<std::string>{"d", "##e", "abc"}));
  EXPECT_EQ(e.word_end_indices, (std::vector<std::size_t>{1, 2}));
}

TEST(EncodeWords, UnknownCodepoint) {
  EXPECT_EQ(encode_word("azb", toy_vocab()), std::vector<std::string>{"[UNK]"});
}

SubwordVocab numbered(std::size_t from, std::size_t to) {
  std::vector<std::string> t = {"[UNK]"};
  for (std::size_t i = from; i < to; ++i) t.push_back("t" + std::to_string(i));
  return SubwordVocab(t, {});
}

TEST(ExtendVocab, Counts) {
  // Base has [UNK] + 19999 tokens, the addition [UNK] + 9999 of which 499
  // overlap, so both count 500 duplicates including [UNK].
  const auto base = numbered(0, 19999);
  const auto added = numbered(19500, 29499);
  ASSERT_EQ(base.size(), 20000u);
  ASSERT_EQ(added.size(), 10000u);
  EXPECT_EQ(extend_vocab(base, added).size(), 29500u);
  EXPECT_EQ(extend_vocab(base, numbered(10, 20)).tokens(), base.tokens());
  const auto disjoint = SubwordVocab({"[UNK]", "x"}, {});
  const auto other = SubwordVocab({"y", "[UNK]"}, {});
  EXPECT_EQ(extend_vocab(disjoint, other).tokens(),
            (std::vector<std::string>{"[UNK]", "x", "y"}));
}

TEST(ExtendVocab, PreservesOrderAndConcatenatesMerges) {
  const SubwordVocab base({"[UNK]", "a", "##b", "ab"}, {{"a", "##b"}});
  const SubwordVocab add({"[UNK]", "c", "##b", "cb"}, {{"c", "##b"}});
  const auto ext = extend_vocab(base, add);
  EXPECT_EQ(ext.tokens(), (std::vector<std::string>{"[UNK]", "a", "##b", "ab", "c", "cb"}));
  EXPECT_EQ(ext.merges(), (std::vector<MergePair>{{"a", "##b"}, {"c", "##b"}}));
}

TEST(VocabIo, RoundTrip) {
  const auto v = train_vocab(table_of(kClassic), 18);
  std::stringstream tokens, merges;
  write_vocab(tokens, v);
  write_merges(merges, v);
  const auto back = read_vocab(tokens, &merges);
  EXPECT_EQ(back.tokens(), v.tokens());
  EXPECT_EQ(back.merges(), v.merges());
}

TEST(SubwordVocab, RejectsDuplicatesAndMissingUnk) {
  EXPECT_THROW(SubwordVocab({"[UNK]", "a", "a"}, {}), ValidationError);
  EXPECT_THROW(SubwordVocab({"a"}, {}), ValidationError);
}

TEST(EncodeProperty, DetokenizationAndWordEnds) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> letter(0, 5);
  std::uniform_int_distribution<int> len(1, 9);
  const auto word = [&] {
    std::string w;
    for (int i = len(rng); i > 0; --i) w += static_cast<char>('a' + letter(rng));
    return w;
  };
  std::map<std::string, std::uint64_t> train;
  for (int i = 0; i < 60; ++i) train[word()] += 1 + letter(rng);
  const auto vocab = train_vocab(table_of(train), 40);

  std::uniform_int_distribution<int> big(0, 6);  // 'g' is outside the alphabet
  int unk = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string w;
    for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + big(rng));
    const auto toks = encode_word(w, vocab);
    if (toks == std::vector<std::string>{"[UNK]"}) {
      ++unk;
      ASSERT_NE(w.find('g'), std::string::npos) << w;
      continue;
    }
    ASSERT_EQ(strip_and_join(toks), w);
  }
  EXPECT_GT(unk, 0);

  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> words;
    for (int k = 1 + letter(rng); k > 0; --k) words.push_back(word());
    const auto e = encode_words(words, vocab);
    ASSERT_EQ(e.word_end_indices.size(), words.size());
    ASSERT_EQ(e.word_end_indices.back(), e.tokens.size() - 1);
    for (std::size_t k = 1; k < e.word_end_indices.size(); ++k) {
      ASSERT_LT(e.word_end_indices[k - 1], e.word_end_indices[k]);
    }
  }
}

}  // namespace
}  // namespace lrlprep
