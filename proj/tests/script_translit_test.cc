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

#include "lrlprep/script_translit.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "lrlprep/error.h"
#include "lrlprep/unicode.h"
#include "oracles.h"

namespace lrlprep {
namespace {

TEST(BuildTable, GurmukhiToDevanagariOffset) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  EXPECT_EQ(t.offset_image(0x0A15), 0x0915u);
  std::u32string out;
  TransliterationReport r;
  t.apply(0x0A15, out, r);
  EXPECT_EQ(out, U"क");
  EXPECT_EQ(r.mapped_count, 1u);
}

TEST(BuildTable, SameScriptIsPreconditionError) {
  EXPECT_THROW(build_table(Script::kDevanagari, Script::kDevanagari),
               PreconditionError);
}

TEST(BuildTable, ExceptionOverridesOffset) {
  std::istringstream rules("0B5F\t092F\n");
  const auto t = build_table(Script::kOriya, Script::kDevanagari, &rules);
  std::u32string out;
  TransliterationReport r;
  t.apply(0x0B5F, out, r);
  EXPECT_EQ(out, U"य");
  EXPECT_EQ(r.exception_count, 1u);
  EXPECT_EQ(r.mapped_count, 0u);
}

TEST(ExceptionRules, ParsesPrefixesCommentsAndSequences) {
  std::istringstream rules(
      "# comment\n"
      "U+0B5F\t0x092F\n"
      "\n"
      "0B71\t0935 094D\n");
  const auto m = parse_exception_rules(rules);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at(0x0B5F), U"य");
  EXPECT_EQ(m.at(0x0B71), U"व्");
}

TEST(ExceptionRules, BadLineNamesLine) {
  std::istringstream rules("0B5F\t092F\nzz\t0915\n");
  try {
    parse_exception_rules(rules);
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ExceptionRules, KeyOutsideSourceBlockRejected) {
  std::istringstream rules("0915\t0A15\n");
  EXPECT_THROW(build_table(Script::kOriya, Script::kDevanagari, &rules),
               ValidationError);
}

TEST(TransliterateText, GurmukhiWord) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const auto r = transliterate_text("ਕਿਤਾਬ", t);
  EXPECT_EQ(r.text, "किताब");
  EXPECT_EQ(r.report.mapped_count, 5u);
}

TEST(TransliterateText, OutOfBlockUnchanged) {
  const auto t = build_table(Script::kOriya, Script::kBengali);
  const auto r = transliterate_text("hello 123", t);
  EXPECT_EQ(r.text, "hello 123");
  EXPECT_EQ(r.report.in_block_count(), 0u);
}

TEST(TransliterateText, RoundTripKa) {
  const auto there = build_table(Script::kDevanagari, Script::kGurmukhi);
  const auto back = build_table(Script::kGurmukhi, Script::kDevanagari);
  EXPECT_EQ(transliterate_text(transliterate_text("क", there).text, back).text,
            "क");
}

TEST(TransliterateText, PassthroughPolicies) {
  // Oriya U+0B44 is assigned, its Gurmukhi image U+0A44 is not.
  const char32_t cp = 0x0B44;
  ASSERT_TRUE(unicode::is_assigned(cp));
  ASSERT_FALSE(unicode::is_assigned(cp - 0x0B00 + 0x0A00));
  std::string in;
  unicode::append(in, cp);
  const auto copy = transliterate_text(
      in, build_table(Script::kOriya, Script::kGurmukhi, nullptr,
                      PassthroughPolicy::kCopy));
  EXPECT_EQ(copy.text, in);
  EXPECT_EQ(copy.report.passthrough_count, 1u);
  EXPECT_EQ(copy.report.passthrough_codepoints.count(cp), 1u);
  EXPECT_EQ(transliterate_text(in, build_table(Script::kOriya, Script::kGurmukhi,
                                               nullptr, PassthroughPolicy::kDrop))
                .text,
            "");
  EXPECT_EQ(transliterate_text(in, build_table(Script::kOriya, Script::kGurmukhi,
                                               nullptr, PassthroughPolicy::kMark))
                .text,
            "\uFFFD");
}

TEST(TransliterateCorpus, PreservesOrder) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const auto r = transliterate_corpus(testing::corpus_of({"ਕ", "ਖ"}), t);
  EXPECT_EQ(r.corpus.lines, (std::vector<std::string>{"क", "ख"}));
  EXPECT_EQ(r.corpus.script, Script::kDevanagari);
}

TEST(TransliterateCorpus, EmptyCorpus) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const auto r = transliterate_corpus(Corpus{}, t);
  EXPECT_TRUE(r.corpus.lines.empty());
  EXPECT_EQ(r.report, TransliterationReport{});
}

TEST(TransliterateCorpus, ReportSumsLines) {
  const auto t = build_table(Script::kGurmukhi, Script::kDevanagari);
  const auto r = transliterate_corpus(testing::corpus_of({"ਕਿਤਾਬ", "abc"}), t);
  EXPECT_EQ(r.report.in_block_count(), 5u);
  EXPECT_EQ(r.report, transliterate_text("ਕਿਤਾਬ", t).report);
}

// Random strings of in-block, neighbouring-block and ASCII codepoints.
std::string fuzz_text(std::mt19937_64& rng, char32_t base) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> off(0, 0x7F);
  std::uniform_int_distribution<int> len(0, 20);
  std::string s;
  for (int n = len(rng); n > 0; --n) {
    switch (kind(rng)) {
      case 0:
      case 1:
        unicode::append(s, base + off(rng));
        break;
      case 2:
        unicode::append(s, 0x0900 + off(rng) + 0x80 * (off(rng) % 5));
        break;
      default:
        s += static_cast<char>('a' + off(rng) % 26);
    }
  }
  return s;
}

TEST(TransliterationProperty, ConservationLengthAndRoundTrip) {
  std::mt19937_64 rng(11);
  for (Script a : kAllScripts) {
    for (Script b : kAllScripts) {
      if (a == b) continue;
      const auto ab = build_table(a, b);
      const auto ba = build_table(b, a);
      const char32_t base = block_of(a).base;
      for (int trial = 0; trial < 50; ++trial) {
        const std::string text = fuzz_text(rng, base);
        std::size_t in_block = 0;
        for (char32_t c : unicode::decode(text)) in_block += block_of(a).contains(c);
        const auto r = transliterate_text(text, ab);
        ASSERT_EQ(r.report.in_block_count(), in_block);
        ASSERT_EQ(unicode::codepoint_count(r.text), unicode::codepoint_count(text));

        // Keep only codepoints whose image is assigned in both directions.
        std::u32string clean;
        for (char32_t c : unicode::decode(text)) {
          if (!block_of(a).contains(c)) {
            if (!block_of(b).contains(c)) clean += c;
          } else if (unicode::is_assigned(c) &&
                     unicode::is_assigned(ab.offset_image(c))) {
            clean += c;
          }
        }
        const std::string x = unicode::encode(clean);
        ASSERT_EQ(transliterate_text(transliterate_text(x, ab).text, ba).text, x);
      }
    }
  }
}

TEST(ParseScript, AcceptsAliases) {
  EXPECT_EQ(parse_script("odia"), Script::kOriya);
  EXPECT_EQ(parse_script("Devanagari"), Script::kDevanagari);
  EXPECT_EQ(parse_script("assamese"), Script::kBengali);
  EXPECT_THROW(parse_script("latin"), ValidationError);
}

}  // namespace
}  // namespace lrlprep
