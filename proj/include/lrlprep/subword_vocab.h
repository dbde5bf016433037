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

// WordPiece-style subword vocabularies.
//
// Training is frequency-driven pair merging: every word starts as one symbol
// per codepoint, word-internal symbols carrying the "##" continuation prefix,
// and the most frequent adjacent pair is merged until the budget is spent.
// Ties go to the lexicographically smallest concatenation `left + right`
// (then the smallest `left`), so training is fully deterministic.
//
// Token order in a trained vocabulary: "[UNK]", the alphabet in byte order,
// then merged tokens in merge order. The line index in a vocab file is the
// token id.

#ifndef LRLPREP_SUBWORD_VOCAB_H_
#define LRLPREP_SUBWORD_VOCAB_H_

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

using MergePair = std::pair<std::string, std::string>;

class SubwordVocab {
 public:
  static constexpr std::string_view kDefaultPrefix = "##";
  static constexpr std::string_view kDefaultUnk = "[UNK]";

  SubwordVocab() : SubwordVocab({std::string(kDefaultUnk)}, {}) {}
  // Throws ValidationError on duplicate tokens or a missing unk token.
  SubwordVocab(std::vector<std::string> tokens, std::vector<MergePair> merges,
               std::string continuation_prefix = std::string(kDefaultPrefix),
               std::string unk_token = std::string(kDefaultUnk));

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<MergePair>& merges() const { return merges_; }
  const std::string& continuation_prefix() const { return prefix_; }
  const std::string& unk_token() const { return unk_; }
  std::size_t size() const { return tokens_.size(); }

  bool contains(std::string_view token) const;
  // -1 when absent.
  std::int64_t id(std::string_view token) const;

 private:
  std::vector<std::string> tokens_;
  std::vector<MergePair> merges_;
  std::string prefix_;
  std::string unk_;
  std::unordered_map<std::string, std::size_t> ids_;
};

struct TrainOptions {
  // Merging stops once the best pair occurs fewer times than this.
  std::uint64_t min_pair_count = 2;
};

// Initial symbols of `word`: first codepoint bare, the rest "##"-prefixed.
std::vector<std::string> initial_symbols(std::string_view word,
                                         std::string_view prefix = "##");

// Token produced by merging `left` and `right` (right loses its prefix).
std::string merged_token(const MergePair& pair, std::string_view prefix = "##");

// `target_size` counts every token except "[UNK]"; it must be at least the
// alphabet size. Throws PreconditionError otherwise or for an empty table.
SubwordVocab train_vocab(const FrequencyTable& freq, std::size_t target_size,
                         const TrainOptions& options = {});

std::size_t alphabet_size(const FrequencyTable& freq);

struct EncodedSentence {
  std::vector<std::string> tokens;
  std::vector<std::size_t> word_end_indices;
};

// Greedy longest-match per word. A word with an unmatchable remainder
// encodes as the single unk token.
std::vector<std::string> encode_word(std::string_view word,
                                     const SubwordVocab& vocab);
EncodedSentence encode_words(const std::vector<std::string>& words,
                             const SubwordVocab& vocab);
EncodedSentence encode_words(const TokenizedSentence& sentence,
                             const SubwordVocab& vocab);

// Base tokens in order, then unseen tokens of `added`. Merge lists are
// concatenated. Throws PreconditionError on mismatched prefix or unk token.
SubwordVocab extend_vocab(const SubwordVocab& base, const SubwordVocab& added);

void write_vocab(std::ostream& out, const SubwordVocab& vocab);
void write_merges(std::ostream& out, const SubwordVocab& vocab);
// `merges` may be null.
SubwordVocab read_vocab(std::istream& tokens, std::istream* merges = nullptr);
SubwordVocab read_vocab_file(const std::string& vocab_path,
                             const std::string& merges_path = "");

}  // namespace lrlprep

#endif  // LRLPREP_SUBWORD_VOCAB_H_
