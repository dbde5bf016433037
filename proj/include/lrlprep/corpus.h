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

// Corpus ingestion, word tokenization and word frequencies.
//
// A corpus is one sentence per line. Lines are stored NFC-normalized with
// trailing whitespace removed; blank lines never make it into a Corpus.

#ifndef LRLPREP_CORPUS_H_
#define LRLPREP_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrlprep/script.h"

namespace lrlprep {

struct Corpus {
  std::vector<std::string> lines;
  std::string language_tag;
  // nullopt means "mixed": zero or several Brahmic blocks were seen.
  std::optional<Script> script;
};

struct TokenizedSentence {
  std::vector<std::string> words;
  std::string raw;
};

struct FrequencyTable {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count(const std::string& word) const {
    auto it = counts.find(word);
    return it == counts.end() ? 0 : it->second;
  }
  // Entries by descending count, ties in byte order.
  std::vector<std::pair<std::string, std::uint64_t>> sorted() const;
};

// Reads the whole stream. Throws EncodingError with the absolute byte offset
// of the first ill-formed sequence.
Corpus ingest_corpus(std::istream& in, std::string language_tag);
Corpus read_corpus_file(const std::string& path, std::string language_tag);

// Writes one line per sentence, each terminated by '\n'.
void write_corpus(std::ostream& out, const Corpus& corpus);

// The single Brahmic block used by `lines`, or nullopt.
std::optional<Script> detect_script(const std::vector<std::string>& lines);

// Splits on Unicode whitespace and detaches every punctuation codepoint
// (ASCII punctuation, U+0964, U+0965) as a word of its own.
TokenizedSentence tokenize_line(std::string_view line);

// True for words produced by punctuation detachment.
bool is_punctuation_word(std::string_view word);

FrequencyTable build_frequency_table(const Corpus& corpus);

// `word\tcount` lines in FrequencyTable::sorted() order.
void write_frequency_table(std::ostream& out, const FrequencyTable& table);

}  // namespace lrlprep

#endif  // LRLPREP_CORPUS_H_
