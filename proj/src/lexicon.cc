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

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "lrlprep/error.h"
#include "lrlprep/script_translit.h"
#include "lrlprep/unicode.h"

namespace lrlprep {
namespace {

bool has_whitespace(std::string_view s) {
  for (char32_t cp : unicode::decode(s)) {
    if (unicode::is_whitespace(cp)) return true;
  }
  return false;
}

std::string translit_word(const std::string& word,
                          const TransliterationTable& table) {
  return unicode::to_nfc(transliterate_text(word, table).text);
}

}  // namespace

std::size_t Lexicon::pair_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.candidates.size();
  return n;
}

const LexiconEntry* Lexicon::find(std::string_view source) const {
  const std::size_t i = index_of(source);
  return i == npos ? nullptr : &entries_[i];
}

std::size_t Lexicon::index_of(std::string_view source) const {
  auto it = index_.find(std::string(source));
  return it == index_.end() ? npos : it->second;
}

bool Lexicon::add(const std::string& source, const std::string& target) {
  auto [it, inserted] = index_.try_emplace(source, entries_.size());
  if (inserted) {
    entries_.push_back({source, {target}});
    return true;
  }
  auto& candidates = entries_[it->second].candidates;
  if (std::find(candidates.begin(), candidates.end(), target) !=
      candidates.end()) {
    return false;
  }
  candidates.push_back(target);
  return true;
}

LexiconLoadResult load_lexicon(std::istream& in, LexiconDirection direction) {
  LexiconLoadResult result{Lexicon(std::move(direction)), 0};
  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    unicode::validate_utf8(line, offset);
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (unicode::rstrip(line).empty()) continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw LoadError("expected exactly one tab separating source and target",
                      line_no);
    }
    std::string source = unicode::to_nfc(unicode::rstrip(line.substr(0, tab)));
    std::string target = unicode::to_nfc(unicode::rstrip(line.substr(tab + 1)));
    if (source.empty() || target.empty()) {
      throw LoadError("empty source or target word", line_no);
    }
    if (has_whitespace(target)) {
      ++result.skipped_count;
      continue;
    }
    result.lexicon.add(source, target);
  }
  return result;
}

LexiconLoadResult load_lexicon_file(const std::string& path,
                                    LexiconDirection direction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open lexicon file '" + path + "'");
  return load_lexicon(in, std::move(direction));
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  std::vector<const LexiconEntry*> order;
  order.reserve(lexicon.size());
  for (const auto& e : lexicon.entries()) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->source < b->source; });
  for (const auto* e : order) {
    for (const auto& c : e->candidates) out << e->source << '\t' << c << '\n';
  }
}

Lexicon merge_lexicons(const Lexicon& a, const Lexicon& b) {
  if (!(a.direction() == b.direction())) {
    throw PreconditionError("cannot merge lexicons of direction " +
                            a.direction().source + "->" + a.direction().target +
                            " and " + b.direction().source + "->" +
                            b.direction().target);
  }
  Lexicon merged(a.direction());
  for (const Lexicon* lex : {&a, &b}) {
    for (const auto& e : lex->entries()) {
      for (const auto& c : e.candidates) merged.add(e.source, c);
    }
  }
  return merged;
}

LexiconSide parse_lexicon_side(std::string_view name) {
  if (name == "source") return LexiconSide::kSource;
  if (name == "target") return LexiconSide::kTarget;
  if (name == "both") return LexiconSide::kBoth;
  throw ValidationError("unknown lexicon side '" + std::string(name) +
                        "' (expected source, target or both)");
}

Lexicon transliterate_lexicon(const Lexicon& lexicon,
                              const TransliterationTable& table,
                              LexiconSide side) {
  const bool do_source = side != LexiconSide::kTarget;
  const bool do_target = side != LexiconSide::kSource;
  Lexicon out(lexicon.direction());
  for (const auto& e : lexicon.entries()) {
    const std::string source =
        do_source ? translit_word(e.source, table) : e.source;
    for (const auto& c : e.candidates) {
      out.add(source, do_target ? translit_word(c, table) : c);
    }
  }
  return out;
}

WeightedLexicon::WeightedLexicon(Lexicon base,
                                 std::vector<std::vector<std::uint64_t>> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.size()) {
    throw PreconditionError("weights do not cover every lexicon entry");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].size() != base_.entries()[i].candidates.size()) {
      throw PreconditionError("weights for '" + base_.entries()[i].source +
                              "' are not parallel to its candidates");
    }
    for (auto w : weights_[i]) {
      if (w == 0) {
        throw PreconditionError("zero weight for '" +
                                base_.entries()[i].source + "'");
      }
    }
  }
}

WeightedLexicon::Lookup WeightedLexicon::find(std::string_view source) const {
  const std::size_t i = base_.index_of(source);
  if (i == Lexicon::npos) return {};
  return {&base_.entries()[i], &weights_[i]};
}

WeightedLexicon weight_lexicon(const Lexicon& lexicon,
                               const FrequencyTable& freq) {
  std::vector<std::vector<std::uint64_t>> weights;
  weights.reserve(lexicon.size());
  for (const auto& e : lexicon.entries()) {
    auto& w = weights.emplace_back();
    w.reserve(e.candidates.size());
    for (const auto& c : e.candidates) w.push_back(std::max<std::uint64_t>(1, freq.count(c)));
  }
  return WeightedLexicon(lexicon, std::move(weights));
}

WeightedLexicon uniform_weights(const Lexicon& lexicon) {
  return weight_lexicon(lexicon, FrequencyTable{});
}

}  // namespace lrlprep
