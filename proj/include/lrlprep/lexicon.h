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

#ifndef LRLPREP_LEXICON_H_
#define LRLPREP_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrlprep/corpus.h"

namespace lrlprep {

class TransliterationTable;

struct LexiconDirection {
  std::string source;
  std::string target;
  friend bool operator==(const LexiconDirection&,
                         const LexiconDirection&) = default;
};

struct LexiconEntry {
  std::string source;
  std::vector<std::string> candidates;  // distinct, first-seen order
};

// Directional word -> candidate translations table. Entries keep the order
// in which their source word was first seen.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(LexiconDirection direction)
      : direction_(std::move(direction)) {}

  const LexiconDirection& direction() const { return direction_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t pair_count() const;

  // nullptr when `source` has no entry.
  const LexiconEntry* find(std::string_view source) const;
  std::size_t index_of(std::string_view source) const;  // npos if absent

  // Adds `target` to the candidates of `source` unless already present.
  // Returns false for a duplicate pair.
  bool add(const std::string& source, const std::string& target);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  LexiconDirection direction_;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LexiconLoadResult {
  Lexicon lexicon;
  std::size_t skipped_count = 0;  // pairs whose target has whitespace
};

// Reads `source\ttarget` lines. Blank lines are ignored. Both sides are
// NFC-normalized. Throws LoadError naming the line for anything but exactly
// one tab with two non-empty sides, EncodingError for bad UTF-8.
LexiconLoadResult load_lexicon(std::istream& in, LexiconDirection direction);
LexiconLoadResult load_lexicon_file(const std::string& path,
                                    LexiconDirection direction);

// Sources in byte order; candidates in stored order.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

// a's candidates first, then b's unseen ones. Throws PreconditionError on a
// direction mismatch.
Lexicon merge_lexicons(const Lexicon& a, const Lexicon& b);

enum class LexiconSide { kSource, kTarget, kBoth };

LexiconSide parse_lexicon_side(std::string_view name);

// Transliterates (and NFC-normalizes) the chosen side. Sources that collide
// afterwards are merged with merge_lexicons semantics.
Lexicon transliterate_lexicon(const Lexicon& lexicon,
                              const TransliterationTable& table,
                              LexiconSide side);

// Lexicon whose candidates carry target-corpus frequencies, floored at 1.
class WeightedLexicon {
 public:
  WeightedLexicon() = default;
  WeightedLexicon(Lexicon base, std::vector<std::vector<std::uint64_t>> weights);

  const Lexicon& base() const { return base_; }
  const std::vector<std::uint64_t>& weights(std::size_t entry) const {
    return weights_[entry];
  }

  struct Lookup {
    const LexiconEntry* entry = nullptr;
    const std::vector<std::uint64_t>* weights = nullptr;
    explicit operator bool() const { return entry != nullptr; }
  };
  Lookup find(std::string_view source) const;

 private:
  Lexicon base_;
  std::vector<std::vector<std::uint64_t>> weights_;
};

// `freq` must be counted over the target language's corpus in the script the
// candidates are written in.
WeightedLexicon weight_lexicon(const Lexicon& lexicon,
                               const FrequencyTable& freq);

// Every candidate weighted 1.
WeightedLexicon uniform_weights(const Lexicon& lexicon);

}  // namespace lrlprep

#endif  // LRLPREP_LEXICON_H_
