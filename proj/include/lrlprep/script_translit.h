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

// Rule-based transliteration between parallel Brahmic Unicode blocks.
//
// A source-block codepoint c is rewritten by, in order:
//   1. the exception table, if it has an entry for c (any length, may be
//      empty to delete c);
//   2. the block offset c - source.base + target.base, if that image is an
//      assigned character;
//   3. the passthrough policy otherwise.
// Codepoints outside the source block are copied unchanged.

#ifndef LRLPREP_SCRIPT_TRANSLIT_H_
#define LRLPREP_SCRIPT_TRANSLIT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "lrlprep/corpus.h"
#include "lrlprep/script.h"

namespace lrlprep {

enum class PassthroughPolicy {
  kCopy,  // keep the source codepoint
  kDrop,  // delete it
  kMark,  // replace it with U+FFFD
};

PassthroughPolicy parse_passthrough_policy(std::string_view name);

struct TransliterationReport {
  std::uint64_t mapped_count = 0;
  std::uint64_t exception_count = 0;
  std::uint64_t passthrough_count = 0;
  std::set<char32_t> passthrough_codepoints;

  std::uint64_t in_block_count() const {
    return mapped_count + exception_count + passthrough_count;
  }
  TransliterationReport& operator+=(const TransliterationReport& other);
  friend bool operator==(const TransliterationReport&,
                         const TransliterationReport&) = default;
};

class TransliterationTable {
 public:
  TransliterationTable(ScriptBlock source, ScriptBlock target,
                       std::map<char32_t, std::u32string> exceptions = {},
                       PassthroughPolicy policy = PassthroughPolicy::kCopy);

  const ScriptBlock& source() const { return source_; }
  const ScriptBlock& target() const { return target_; }
  PassthroughPolicy passthrough_policy() const { return policy_; }
  const std::map<char32_t, std::u32string>& exceptions() const {
    return exceptions_;
  }

  // Offset image of an in-block codepoint, without consulting exceptions.
  char32_t offset_image(char32_t cp) const {
    return cp - source_.base + target_.base;
  }

  // Appends the rewrite of `cp` to `out` and tallies it.
  void apply(char32_t cp, std::u32string& out,
             TransliterationReport& report) const;

 private:
  ScriptBlock source_;
  ScriptBlock target_;
  std::map<char32_t, std::u32string> exceptions_;
  PassthroughPolicy policy_;
};

// Exception-file rules, `<hex>\t<hex hex ...>` per line, '#' comments.
// Throws LoadError with the 1-based line number on malformed input.
std::map<char32_t, std::u32string> parse_exception_rules(std::istream& in);

// Throws PreconditionError if source == target, ValidationError if an
// exception key lies outside the source block.
TransliterationTable build_table(
    Script source, Script target, std::istream* exception_file = nullptr,
    PassthroughPolicy policy = PassthroughPolicy::kCopy);

struct TransliterationResult {
  std::string text;
  TransliterationReport report;
};

TransliterationResult transliterate_text(std::string_view text,
                                         const TransliterationTable& table);

struct CorpusTransliteration {
  Corpus corpus;
  TransliterationReport report;
};

// Each output line is the NFC form of transliterate_text's output for that
// line, keeping the Corpus normalization invariant.
CorpusTransliteration transliterate_corpus(const Corpus& corpus,
                                           const TransliterationTable& table);

}  // namespace lrlprep

#endif  // LRLPREP_SCRIPT_TRANSLIT_H_
