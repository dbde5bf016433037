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

// Word-by-word pseudo-translation with a bilingual lexicon.
//
// Every sentence is translated position by position, so the word alignment
// of an emitted pair is always the diagonal. Words without a lexicon entry
// and detached punctuation are copied through unchanged.
//
// Reproducibility: the random stream of a sentence depends only on
// (seed, provenance, line index):
//
//   stream_seed = mix64(mix64(seed ^ salt(provenance)) + line_index)
//
// where mix64 is the SplitMix64 finalizer and salt(R_to_L) =
// 0x52544F4C00000001, salt(LR_to_R) = 0x4C52544F00000002. The stream itself
// is a SplitMix64 generator started at stream_seed. Output is therefore
// independent of the order (or thread) in which sentences are processed.

#ifndef LRLPREP_PSEUDO_TRANSLATE_H_
#define LRLPREP_PSEUDO_TRANSLATE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrlprep/corpus.h"
#include "lrlprep/lexicon.h"

namespace lrlprep {

enum class LookupStrategy { kFirst, kMax, kWeighted, kRootWeighted };

LookupStrategy parse_lookup_strategy(std::string_view name);
std::string_view strategy_name(LookupStrategy strategy);

enum class Provenance { kRToL, kLRToR };

std::string_view provenance_name(Provenance p);  // "R_to_L" / "LR_to_R"
Provenance parse_provenance(std::string_view name);

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }
  // Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

std::uint64_t derive_stream_seed(std::uint64_t seed, Provenance provenance,
                                 std::uint64_t line_index);

// Index of the chosen candidate. first/max never touch `rng`. Throws
// PreconditionError on empty or non-parallel input.
std::size_t select_candidate_index(std::span<const std::string> candidates,
                                   std::span<const std::uint64_t> weights,
                                   LookupStrategy strategy, SplitMix64& rng);

const std::string& select_candidate(std::span<const std::string> candidates,
                                    std::span<const std::uint64_t> weights,
                                    LookupStrategy strategy, SplitMix64& rng);

struct AlignedSentencePair {
  std::vector<std::string> source_words;
  std::vector<std::string> target_words;
  std::vector<std::pair<std::size_t, std::size_t>> alignment;
};

// One line of the pair file: the pair plus where it came from.
struct AlignedPairRecord {
  AlignedSentencePair pair;
  Provenance provenance = Provenance::kRToL;
  std::uint64_t index = 0;
};

struct AlignedPairSet {
  std::vector<AlignedPairRecord> records;
  std::uint64_t seed = 0;
};

AlignedSentencePair pseudo_translate_sentence(const TokenizedSentence& sentence,
                                              const WeightedLexicon& lexicon,
                                              LookupStrategy strategy,
                                              SplitMix64& rng);

// Translates line `index` of a corpus with its derived stream.
AlignedPairRecord pseudo_translate_line(std::string_view line,
                                        const WeightedLexicon& lexicon,
                                        LookupStrategy strategy,
                                        std::uint64_t seed,
                                        Provenance provenance,
                                        std::uint64_t index);

// Every line of `corpus`, with the given provenance, in line order.
std::vector<AlignedPairRecord> pseudo_translate_corpus(
    const Corpus& corpus, const WeightedLexicon& lexicon,
    LookupStrategy strategy, std::uint64_t seed, Provenance provenance);

// P = (D_R translated with the R->L_R lexicon) followed by
//     (D_L_R translated with the L_R->R lexicon).
// Both lexicons must already be in the RPL script.
AlignedPairSet build_pseudo_parallel(const Corpus& rpl_corpus,
                                     const Corpus& lrl_translit_corpus,
                                     const WeightedLexicon& lex_r_to_lr,
                                     const WeightedLexicon& lex_lr_to_r,
                                     LookupStrategy strategy,
                                     std::uint64_t seed);

// Throws ValidationError if the pair breaks the diagonal-alignment contract.
void check_aligned_pair(const AlignedSentencePair& pair);

}  // namespace lrlprep

#endif  // LRLPREP_PSEUDO_TRANSLATE_H_
