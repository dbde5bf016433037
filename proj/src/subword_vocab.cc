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

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "lrlprep/error.h"
#include "lrlprep/unicode.h"

namespace lrlprep {
namespace {

using SymbolId = std::uint32_t;
using PairKey = std::uint64_t;

PairKey make_key(SymbolId a, SymbolId b) {
  return (static_cast<PairKey>(a) << 32) | b;
}
SymbolId key_left(PairKey k) { return static_cast<SymbolId>(k >> 32); }
SymbolId key_right(PairKey k) { return static_cast<SymbolId>(k & 0xFFFFFFFFu); }

struct TrainWord {
  std::vector<SymbolId> symbols;
  std::uint64_t freq;
};

// Incremental pair statistics for the merge loop.
class PairTable {
 public:
  explicit PairTable(const std::vector<std::string>& symbols)
      : ranking_(RankLess{&symbols}) {}

  void adjust(PairKey key, std::int64_t delta) {
    auto& count = counts_[key];
    if (count > 0) ranking_.erase({count, key});
    count += delta;
    if (count > 0) ranking_.insert({count, key});
  }

  void add_word(const TrainWord& w, std::uint32_t word_id, std::int64_t sign) {
    for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i) {
      const PairKey key = make_key(w.symbols[i], w.symbols[i + 1]);
      adjust(key, sign * static_cast<std::int64_t>(w.freq));
      if (sign > 0) occurrences_[key].insert(word_id);
    }
  }

  bool empty() const { return ranking_.empty(); }
  std::pair<std::int64_t, PairKey> best() const { return *ranking_.begin(); }

  std::vector<std::uint32_t> words_with(PairKey key) const {
    auto it = occurrences_.find(key);
    if (it == occurrences_.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

 private:
  struct RankLess {
    const std::vector<std::string>* symbols;
    bool operator()(const std::pair<std::int64_t, PairKey>& a,
                    const std::pair<std::int64_t, PairKey>& b) const {
      if (a.first != b.first) return a.first > b.first;
      if (a.second == b.second) return false;
      const auto& al = (*symbols)[key_left(a.second)];
      const auto& ar = (*symbols)[key_right(a.second)];
      const auto& bl = (*symbols)[key_left(b.second)];
      const auto& br = (*symbols)[key_right(b.second)];
      const std::string ac = al + ar;
      const std::string bc = bl + br;
      if (ac != bc) return ac < bc;
      return al < bl;
    }
  };

  std::unordered_map<PairKey, std::int64_t> counts_;
  std::unordered_map<PairKey, std::set<std::uint32_t>> occurrences_;
  std::set<std::pair<std::int64_t, PairKey>, RankLess> ranking_;
};

bool apply_merge(std::vector<SymbolId>& symbols, SymbolId left, SymbolId right,
                 SymbolId merged) {
  bool changed = false;
  std::vector<SymbolId> out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
      out.push_back(merged);
      ++i;
      changed = true;
    } else {
      out.push_back(symbols[i]);
    }
  }
  symbols = std::move(out);
  return changed;
}

}  // namespace

SubwordVocab::SubwordVocab(std::vector<std::string> tokens,
                           std::vector<MergePair> merges,
                           std::string continuation_prefix,
                           std::string unk_token)
    : tokens_(std::move(tokens)),
      merges_(std::move(merges)),
      prefix_(std::move(continuation_prefix)),
      unk_(std::move(unk_token)) {
  ids_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], i).second) {
      throw ValidationError("duplicate vocabulary token '" + tokens_[i] + "'");
    }
  }
  if (!ids_.contains(unk_)) {
    throw ValidationError("vocabulary lacks the unknown token '" + unk_ + "'");
  }
}

bool SubwordVocab::contains(std::string_view token) const {
  return ids_.contains(std::string(token));
}

std::int64_t SubwordVocab::id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::string> initial_symbols(std::string_view word,
                                         std::string_view prefix) {
  std::vector<std::string> out;
  bool first = true;
  for (char32_t cp : unicode::decode(word)) {
    std::string sym = first ? std::string() : std::string(prefix);
    unicode::append(sym, cp);
    out.push_back(std::move(sym));
    first = false;
  }
  return out;
}

std::string merged_token(const MergePair& pair, std::string_view prefix) {
  std::string_view right = pair.second;
  if (right.starts_with(prefix)) right.remove_prefix(prefix.size());
  return pair.first + std::string(right);
}

std::size_t alphabet_size(const FrequencyTable& freq) {
  std::set<std::string> alphabet;
  for (const auto& [word, count] : freq.counts) {
    for (auto& s : initial_symbols(word)) alphabet.insert(std::move(s));
  }
  return alphabet.size();
}

SubwordVocab train_vocab(const FrequencyTable& freq, std::size_t target_size,
                         const TrainOptions& options) {
  if (freq.counts.empty()) {
    throw PreconditionError("cannot train a vocabulary on an empty table");
  }
  const std::string prefix(SubwordVocab::kDefaultPrefix);

  std::vector<std::string> symbols;
  std::unordered_map<std::string, SymbolId> symbol_ids;
  const auto intern = [&](const std::string& s) {
    auto [it, inserted] =
        symbol_ids.try_emplace(s, static_cast<SymbolId>(symbols.size()));
    if (inserted) symbols.push_back(s);
    return it->second;
  };

  std::set<std::string> alphabet;
  std::vector<TrainWord> words;
  for (const auto& [word, count] : freq.sorted()) {
    TrainWord w{{}, count};
    for (auto& s : initial_symbols(word, prefix)) {
      alphabet.insert(s);
      w.symbols.push_back(intern(s));
    }
    words.push_back(std::move(w));
  }
  if (target_size < alphabet.size()) {
    throw PreconditionError("target size " + std::to_string(target_size) +
                            " is below the alphabet size; minimum is " +
                            std::to_string(alphabet.size()));
  }

  std::vector<std::string> tokens;
  tokens.emplace_back(SubwordVocab::kDefaultUnk);
  tokens.insert(tokens.end(), alphabet.begin(), alphabet.end());
  std::unordered_set<std::string> token_set(tokens.begin(), tokens.end());
  std::vector<MergePair> merges;

  PairTable table(symbols);
  for (std::uint32_t i = 0; i < words.size(); ++i) table.add_word(words[i], i, +1);

  while (tokens.size() - 1 < target_size && !table.empty()) {
    const auto [count, key] = table.best();
    if (static_cast<std::uint64_t>(count) < options.min_pair_count) break;

    const SymbolId left = key_left(key);
    const SymbolId right = key_right(key);
    MergePair merge{symbols[left], symbols[right]};
    const std::string token = merged_token(merge, prefix);
    const SymbolId merged = intern(token);

    for (std::uint32_t wid : table.words_with(key)) {
      TrainWord& w = words[wid];
      std::vector<SymbolId> updated = w.symbols;
      if (!apply_merge(updated, left, right, merged)) continue;
      table.add_word(w, wid, -1);
      w.symbols = std::move(updated);
      table.add_word(w, wid, +1);
    }

    merges.push_back(std::move(merge));
    if (token_set.insert(token).second) tokens.push_back(token);
  }
  return SubwordVocab(std::move(tokens), std::move(merges));
}

std::vector<std::string> encode_word(std::string_view word,
                                     const SubwordVocab& vocab) {
  const std::u32string cps = unicode::decode(word);
  std::vector<std::size_t> offsets;  // byte offset of each codepoint, plus end
  offsets.reserve(cps.size() + 1);
  std::size_t off = 0;
  for (char32_t cp : cps) {
    offsets.push_back(off);
    std::string tmp;
    unicode::append(tmp, cp);
    off += tmp.size();
  }
  offsets.push_back(off);

  std::vector<std::string> pieces;
  std::size_t start = 0;
  while (start < cps.size()) {
    std::size_t end = cps.size();
    std::string found;
    for (; end > start; --end) {
      std::string candidate =
          std::string(word.substr(offsets[start], offsets[end] - offsets[start]));
      if (start > 0) candidate = vocab.continuation_prefix() + candidate;
      if (vocab.contains(candidate)) {
        found = std::move(candidate);
        break;
      }
    }
    if (end == start) return {vocab.unk_token()};
    pieces.push_back(std::move(found));
    start = end;
  }
  return pieces;
}

EncodedSentence encode_words(const std::vector<std::string>& words,
                             const SubwordVocab& vocab) {
  EncodedSentence out;
  out.word_end_indices.reserve(words.size());
  for (const auto& word : words) {
    for (auto& piece : encode_word(word, vocab)) {
      out.tokens.push_back(std::move(piece));
    }
    out.word_end_indices.push_back(out.tokens.size() - 1);
  }
  return out;
}

EncodedSentence encode_words(const TokenizedSentence& sentence,
                             const SubwordVocab& vocab) {
  return encode_words(sentence.words, vocab);
}

SubwordVocab extend_vocab(const SubwordVocab& base, const SubwordVocab& added) {
  if (base.continuation_prefix() != added.continuation_prefix() ||
      base.unk_token() != added.unk_token()) {
    throw PreconditionError(
        "vocabularies disagree on continuation prefix or unknown token");
  }
  std::vector<std::string> tokens = base.tokens();
  for (const auto& t : added.tokens()) {
    if (!base.contains(t)) tokens.push_back(t);
  }
  std::vector<MergePair> merges = base.merges();
  merges.insert(merges.end(), added.merges().begin(), added.merges().end());
  return SubwordVocab(std::move(tokens), std::move(merges),
                      base.continuation_prefix(), base.unk_token());
}

void write_vocab(std::ostream& out, const SubwordVocab& vocab) {
  for (const auto& t : vocab.tokens()) out << t << '\n';
}

void write_merges(std::ostream& out, const SubwordVocab& vocab) {
  for (const auto& [l, r] : vocab.merges()) out << l << ' ' << r << '\n';
}

SubwordVocab read_vocab(std::istream& tokens_in, std::istream* merges_in) {
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(tokens_in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw LoadError("empty vocabulary token", line_no);
    unicode::validate_utf8(line);
    tokens.push_back(line);
  }
  std::vector<MergePair> merges;
  if (merges_in != nullptr) {
    line_no = 0;
    while (std::getline(*merges_in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto sp = line.find(' ');
      if (sp == std::string::npos || sp == 0 || sp + 1 == line.size() ||
          line.find(' ', sp + 1) != std::string::npos) {
        throw LoadError("expected '<left> <right>'", line_no);
      }
      merges.emplace_back(line.substr(0, sp), line.substr(sp + 1));
    }
  }
  try {
    return SubwordVocab(std::move(tokens), std::move(merges));
  } catch (const ValidationError& e) {
    throw LoadError(e.what());
  }
}

SubwordVocab read_vocab_file(const std::string& vocab_path,
                             const std::string& merges_path) {
  std::ifstream tokens(vocab_path, std::ios::binary);
  if (!tokens) throw LoadError("cannot open vocabulary file '" + vocab_path + "'");
  if (merges_path.empty()) return read_vocab(tokens);
  std::ifstream merges(merges_path, std::ios::binary);
  if (!merges) throw LoadError("cannot open merges file '" + merges_path + "'");
  return read_vocab(tokens, &merges);
}

}  // namespace lrlprep
