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

#include "lrlprep/lexicon.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "lrlprep/error.h"
#include "lrlprep/script_translit.h"
#include "oracles.h"

namespace lrlprep {
namespace {

const LexiconDirection kDir{"pa", "hi"};

Lexicon lex_of(std::initializer_list<std::pair<const char*, const char*>> pairs,
               LexiconDirection dir = kDir) {
  Lexicon l(std::move(dir));
  for (const auto& [s, t] : pairs) l.add(s, t);
  return l;
}

std::set<std::pair<std::string, std::string>> pair_set(const Lexicon& l) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : l.entries()) {
    for (const auto& c : e.candidates) out.insert({e.source, c});
  }
  return out;
}

TEST(LoadLexicon, DedupsPreservingOrder) {
  std::istringstream in("w\tx\nw\ty\nw\tx\n");
  const auto r = load_lexicon(in, kDir);
  ASSERT_EQ(r.lexicon.size(), 1u);
  EXPECT_EQ(r.lexicon.find("w")->candidates, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(r.skipped_count, 0u);
}

TEST(LoadLexicon, SkipsMultiWordTargets) {
  std::istringstream in("w\tnew york\n");
  const auto r = load_lexicon(in, kDir);
  EXPECT_TRUE(r.lexicon.empty());
  EXPECT_EQ(r.skipped_count, 1u);
}

TEST(LoadLexicon, MissingTabIsLoadErrorAtLine) {
  std::istringstream in("w x y\n");
  try {
    load_lexicon(in, kDir);
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(LoadLexicon, MissingFile) {
  EXPECT_THROW(load_lexicon_file("/nonexistent/lex.tsv", kDir), LoadError);
}

TEST(MergeLexicons, Examples) {
  EXPECT_EQ(pair_set(merge_lexicons(lex_of({{"w", "x"}}), lex_of({{"w", "y"}}))),
            pair_set(lex_of({{"w", "x"}, {"w", "y"}})));
  EXPECT_EQ(merge_lexicons(lex_of({{"w", "x"}}), lex_of({{"w", "x"}})).pair_count(),
            1u);
  const auto d = merge_lexicons(lex_of({{"w", "x"}}), lex_of({{"v", "z"}}));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.find("v")->candidates, std::vector<std::string>{"z"});
}

TEST(MergeLexicons, DirectionMismatch) {
  EXPECT_THROW(merge_lexicons(lex_of({{"w", "x"}}),
                              lex_of({{"w", "x"}}, {"hi", "pa"})),
               PreconditionError);
}

TEST(MergeLexiconsProperty, AssociativeIdempotentUnion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 5);
  const auto random_lex = [&] {
    Lexicon l(kDir);
    for (int i = 0; i < 8; ++i) {
      l.add(std::string(1, static_cast<char>('a' + pick(rng))),
            std::string(1, static_cast<char>('p' + pick(rng))));
    }
    return l;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Lexicon a = random_lex();
    const Lexicon b = random_lex();
    const Lexicon c = random_lex();
    const auto left = pair_set(merge_lexicons(merge_lexicons(a, b), c));
    const auto right = pair_set(merge_lexicons(a, merge_lexicons(b, c)));
    ASSERT_EQ(left, right);
    ASSERT_EQ(pair_set(merge_lexicons(a, a)), pair_set(a));
    auto uni = pair_set(a);
    for (const auto& p : pair_set(b)) uni.insert(p);
    ASSERT_EQ(pair_set(merge_lexicons(a, b)), uni);
  }
}

TEST(TransliterateLexicon, SourceSide) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const auto out = transliterate_lexicon(lex_of({{"ਕਿਤਾਬ", "book"}}), t,
                                         LexiconSide::kSource);
  ASSERT_NE(out.find("किताब"), nullptr);
  EXPECT_EQ(out.find("किताब")->candidates, std::vector<std::string>{"book"});
}

TEST(TransliterateLexicon, TargetSideOutOfBlockUnchanged) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const Lexicon in = lex_of({{"x", "किताब"}});
  const auto out = transliterate_lexicon(in, t, LexiconSide::kTarget);
  EXPECT_EQ(pair_set(out), pair_set(in));
}

TEST(TransliterateLexicon, CollisionsMerge) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  // ਕ maps to क, which is already a source.
  const auto out = transliterate_lexicon(lex_of({{"ਕ", "a"}, {"क", "b"}}), t,
                                         LexiconSide::kSource);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.find("क")->candidates, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(out.pair_count(), 2u);
}

TEST(WeightLexicon, FrequencyLookupAndFloor) {
  const auto freq = build_frequency_table(testing::corpus_of({"x x x y"}));
  const auto w = weight_lexicon(lex_of({{"w", "x"}, {"w", "y"}, {"w", "z"}}), freq);
  EXPECT_EQ(*w.find("w").weights, (std::vector<std::uint64_t>{3, 1, 1}));
  const auto u = weight_lexicon(lex_of({{"w", "x"}, {"w", "y"}}), FrequencyTable{});
  EXPECT_EQ(*u.find("w").weights, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_FALSE(w.find("nope"));
}

TEST(WriteLexicon, SortedSources) {
  std::ostringstream out;
  write_lexicon(out, lex_of({{"b", "x"}, {"a", "y"}, {"b", "z"}}));
  EXPECT_EQ(out.str(), "a\ty\nb\tx\nb\tz\n");
}

}  // namespace
}  // namespace lrlprep
