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

#include "lrlprep/corpus.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>

#include "lrlprep/error.h"
#include "lrlprep/unicode.h"

namespace lrlprep {

Corpus ingest_corpus(std::istream& in, std::string language_tag) {
  const std::string data{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  Corpus corpus;
  corpus.language_tag = std::move(language_tag);

  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string::npos) end = data.size();
    const std::string_view raw(data.data() + pos, end - pos);
    unicode::validate_utf8(raw, pos);
    const std::string_view stripped = unicode::rstrip(raw);
    if (!stripped.empty()) {
      std::string line = unicode::to_nfc(stripped);
      // Normalization can expose trailing whitespace only in pathological
      // input; strip once more to keep the invariant exact.
      line.resize(unicode::rstrip(line).size());
      if (!line.empty()) corpus.lines.push_back(std::move(line));
    }
    pos = end + 1;
  }
  corpus.script = detect_script(corpus.lines);
  return corpus;
}

Corpus read_corpus_file(const std::string& path, std::string language_tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open corpus file '" + path + "'");
  return ingest_corpus(in, std::move(language_tag));
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& line : corpus.lines) out << line << '\n';
}

std::optional<Script> detect_script(const std::vector<std::string>& lines) {
  std::set<Script> seen;
  for (const auto& line : lines) {
    for (char32_t cp : unicode::decode(line)) {
      // The dandas live in the Devanagari block but every script uses them.
      if (cp == 0x0964 || cp == 0x0965) continue;
      if (auto s = script_of_codepoint(cp)) seen.insert(*s);
    }
  }
  if (seen.size() == 1) return *seen.begin();
  return std::nullopt;
}

TokenizedSentence tokenize_line(std::string_view line) {
  TokenizedSentence sentence;
  sentence.raw = std::string(line);
  std::u32string current;
  const auto flush = [&] {
    if (!current.empty()) {
      sentence.words.push_back(unicode::encode(current));
      current.clear();
    }
  };
  for (char32_t cp : unicode::decode(line)) {
    if (unicode::is_whitespace(cp)) {
      flush();
    } else if (unicode::is_word_punctuation(cp)) {
      flush();
      sentence.words.push_back(unicode::encode(std::u32string(1, cp)));
    } else {
      current.push_back(cp);
    }
  }
  flush();
  return sentence;
}

bool is_punctuation_word(std::string_view word) {
  const std::u32string cps = unicode::decode(word);
  return cps.size() == 1 && unicode::is_word_punctuation(cps[0]);
}

std::vector<std::pair<std::string, std::uint64_t>> FrequencyTable::sorted()
    const {
  std::vector<std::pair<std::string, std::uint64_t>> entries(counts.begin(),
                                                             counts.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return entries;
}

FrequencyTable build_frequency_table(const Corpus& corpus) {
  FrequencyTable table;
  for (const auto& line : corpus.lines) {
    for (auto& word : tokenize_line(line).words) {
      ++table.counts[std::move(word)];
      ++table.total;
    }
  }
  return table;
}

void write_frequency_table(std::ostream& out, const FrequencyTable& table) {
  for (const auto& [word, count] : table.sorted()) {
    out << word << '\t' << count << '\n';
  }
}

}  // namespace lrlprep
