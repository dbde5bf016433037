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

#include "lrlprep/pseudo_translate.h"

#include <cmath>

#include "lrlprep/error.h"

namespace lrlprep {
namespace {

constexpr std::uint64_t kSaltRToL = 0x52544F4C00000001ULL;
constexpr std::uint64_t kSaltLRToR = 0x4C52544F00000002ULL;

}  // namespace

LookupStrategy parse_lookup_strategy(std::string_view name) {
  if (name == "first") return LookupStrategy::kFirst;
  if (name == "max") return LookupStrategy::kMax;
  if (name == "weighted") return LookupStrategy::kWeighted;
  if (name == "root_weighted" || name == "root-weighted") {
    return LookupStrategy::kRootWeighted;
  }
  throw ValidationError("unknown lookup strategy '" + std::string(name) +
                        "' (expected first, max, weighted or root_weighted)");
}

std::string_view strategy_name(LookupStrategy strategy) {
  switch (strategy) {
    case LookupStrategy::kFirst:
      return "first";
    case LookupStrategy::kMax:
      return "max";
    case LookupStrategy::kWeighted:
      return "weighted";
    case LookupStrategy::kRootWeighted:
      return "root_weighted";
  }
  return "unknown";
}

std::string_view provenance_name(Provenance p) {
  return p == Provenance::kRToL ? "R_to_L" : "LR_to_R";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "R_to_L") return Provenance::kRToL;
  if (name == "LR_to_R") return Provenance::kLRToR;
  throw ValidationError("unknown provenance '" + std::string(name) +
                        "' (expected R_to_L or LR_to_R)");
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty sampling range");
  // Lemire's multiply-shift with rejection of the biased low zone.
  unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double SplitMix64::unit() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, Provenance provenance,
                                 std::uint64_t line_index) {
  const std::uint64_t salt =
      provenance == Provenance::kRToL ? kSaltRToL : kSaltLRToR;
  return mix64(mix64(seed ^ salt) + line_index);
}

std::size_t select_candidate_index(std::span<const std::string> candidates,
                                   std::span<const std::uint64_t> weights,
                                   LookupStrategy strategy, SplitMix64& rng) {
  if (candidates.empty()) throw PreconditionError("no candidates to select from");
  if (weights.size() != candidates.size()) {
    throw PreconditionError("weights are not parallel to candidates");
  }
  if (candidates.size() == 1) return 0;

  switch (strategy) {
    case LookupStrategy::kFirst:
      return 0;
    case LookupStrategy::kMax: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < weights.size(); ++i) {
        if (weights[i] > weights[best]) best = i;
      }
      return best;
    }
    case LookupStrategy::kWeighted: {
      std::uint64_t total = 0;
      for (auto w : weights) {
        if (w == 0) throw PreconditionError("zero candidate weight");
        if (total > std::numeric_limits<std::uint64_t>::max() - w) {
          throw PreconditionError("candidate weights overflow");
        }
        total += w;
      }
      std::uint64_t r = rng.below(total);
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
      }
      return weights.size() - 1;
    }
    case LookupStrategy::kRootWeighted: {
      std::vector<double> roots(weights.size());
      double total = 0.0;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) throw PreconditionError("zero candidate weight");
        roots[i] = std::sqrt(static_cast<double>(weights[i]));
        total += roots[i];
      }
      double r = rng.unit() * total;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (r < roots[i]) return i;
        r -= roots[i];
      }
      return roots.size() - 1;
    }
  }
  throw PreconditionError("unknown lookup strategy");
}

const std::string& select_candidate(std::span<const std::string> candidates,
                                    std::span<const std::uint64_t> weights,
                                    LookupStrategy strategy, SplitMix64& rng) {
  return candidates[select_candidate_index(candidates, weights, strategy, rng)];
}

AlignedSentencePair pseudo_translate_sentence(const TokenizedSentence& sentence,
                                              const WeightedLexicon& lexicon,
                                              LookupStrategy strategy,
                                              SplitMix64& rng) {
  AlignedSentencePair pair;
  pair.source_words = sentence.words;
  pair.target_words.reserve(sentence.words.size());
  pair.alignment.reserve(sentence.words.size());
  for (std::size_t i = 0; i < sentence.words.size(); ++i) {
    const std::string& word = sentence.words[i];
    const auto hit = is_punctuation_word(word) ? WeightedLexicon::Lookup{}
                                               : lexicon.find(word);
    if (hit) {
      pair.target_words.push_back(select_candidate(hit.entry->candidates,
                                                   *hit.weights, strategy, rng));
    } else {
      pair.target_words.push_back(word);
    }
    pair.alignment.emplace_back(i, i);
  }
  return pair;
}

AlignedPairRecord pseudo_translate_line(std::string_view line,
                                        const WeightedLexicon& lexicon,
                                        LookupStrategy strategy,
                                        std::uint64_t seed,
                                        Provenance provenance,
                                        std::uint64_t index) {
  SplitMix64 rng(derive_stream_seed(seed, provenance, index));
  return {pseudo_translate_sentence(tokenize_line(line), lexicon, strategy, rng),
          provenance, index};
}

std::vector<AlignedPairRecord> pseudo_translate_corpus(
    const Corpus& corpus, const WeightedLexicon& lexicon,
    LookupStrategy strategy, std::uint64_t seed, Provenance provenance) {
  std::vector<AlignedPairRecord> records;
  records.reserve(corpus.lines.size());
  for (std::size_t i = 0; i < corpus.lines.size(); ++i) {
    records.push_back(pseudo_translate_line(corpus.lines[i], lexicon, strategy,
                                            seed, provenance, i));
  }
  return records;
}

AlignedPairSet build_pseudo_parallel(const Corpus& rpl_corpus,
                                     const Corpus& lrl_translit_corpus,
                                     const WeightedLexicon& lex_r_to_lr,
                                     const WeightedLexicon& lex_lr_to_r,
                                     LookupStrategy strategy,
                                     std::uint64_t seed) {
  AlignedPairSet set;
  set.seed = seed;
  set.records = pseudo_translate_corpus(rpl_corpus, lex_r_to_lr, strategy,
                                        seed, Provenance::kRToL);
  auto reverse = pseudo_translate_corpus(lrl_translit_corpus, lex_lr_to_r,
                                         strategy, seed, Provenance::kLRToR);
  set.records.insert(set.records.end(), std::make_move_iterator(reverse.begin()),
                     std::make_move_iterator(reverse.end()));
  return set;
}

void check_aligned_pair(const AlignedSentencePair& pair) {
  if (pair.source_words.size() != pair.target_words.size()) {
    throw ValidationError("source has " +
                          std::to_string(pair.source_words.size()) +
                          " words, target has " +
                          std::to_string(pair.target_words.size()));
  }
  if (pair.alignment.size() != pair.source_words.size()) {
    throw ValidationError("alignment does not cover every word");
  }
  for (std::size_t i = 0; i < pair.alignment.size(); ++i) {
    if (pair.alignment[i].first != i || pair.alignment[i].second != i) {
      throw ValidationError("alignment is not the diagonal at position " +
                            std::to_string(i));
    }
  }
}

}  // namespace lrlprep
