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

#include "lrlprep/tag_mapping.h"

#include <istream>
#include <ostream>
#include <set>

#include "lrlprep/error.h"
#include "lrlprep/unicode.h"

namespace lrlprep {
namespace {

TagMapping build_mapping() {
  TagMapping m;
  m.simple = {
      {"CC", "CC"},   {"CD", "QT"},    {"EX", "RD"},    {"FW", "RD"},
      {"IN", "PSP"},  {"JJ", "JJ"},    {"JJR", "JJ"},   {"JJS", "JJ"},
      {"LS", "QT"},   {"MD", "V"},     {"NN", "N"},     {"NNS", "N"},
      {"NNP", "N"},   {"NNPS", "N"},   {"POS", "PSP"},  {"PRP", "PR"},
      {"PRP$", "PR"}, {"RB", "RB"},    {"RBR", "RB"},   {"RBS", "RB"},
      {"RP", "RP"},   {"SYM", "RD"},   {"TO", "RP"},    {"UH", "RP"},
      {"VB", "V"},    {"VBD", "V"},    {"VBG", "V"},    {"VBN", "V"},
      {"VBP", "V"},   {"VBZ", "V"},    {"WP", "PR"},    {"WP$", "PR"},
      {"AFX", "RD"},  {"-LRB-", "RD"}, {"-RRB-", "RD"},
  };

  // Punctuation tags. Treebank files spell the quote tags `` and '' and
  // the table prints them typographically, so both spellings are accepted.
  for (const char* punct : {"#", ".", ",", "$", "``", "“", "(", ")", ":",
                            "-", "''", "‘’", "”", "`",
                            "‘", "'", "’"}) {
    m.simple.emplace(punct, "RD");
  }

  const auto lex = [&m](const char* tag, std::initializer_list<const char*> words,
                        const char* bis) {
    for (const char* w : words) m.lexicalized[{tag, w}] = bis;
  };
  lex("PDT", {"all", "half"}, "QT");
  lex("PDT", {"such"}, "DM");
  m.defaults["PDT"] = "QT";

  lex("WDT", {"which", "that"}, "PR");
  lex("WDT", {"whatever"}, "RP");
  m.defaults["WDT"] = "PR";

  lex("DT", {"some", "every", "both", "all", "another", "a", "an"}, "QT");
  lex("DT", {"this", "these", "the"}, "DM");
  lex("DT", {"those", "that"}, "PR");
  m.defaults["DT"] = "QT";

  lex("WRB", {"how", "wherever", "when", "where"}, "PR");
  lex("WRB", {"whenever", "why"}, "RB");
  m.defaults["WRB"] = "PR";
  return m;
}

std::string join_tags(const std::vector<std::string>& tags) {
  std::string out;
  for (const auto& t : tags) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

std::vector<std::string> TagMapping::penn_tags() const {
  std::set<std::string> tags;
  for (const auto& [tag, bis] : simple) tags.insert(tag);
  for (const auto& [tag, bis] : defaults) tags.insert(tag);
  return {tags.begin(), tags.end()};
}

const TagMapping& penn_to_bis_mapping() {
  static const TagMapping mapping = build_mapping();
  return mapping;
}

std::string map_penn_to_bis(std::string_view tag, std::string_view word) {
  const TagMapping& m = penn_to_bis_mapping();
  const std::string t(tag);
  if (auto d = m.defaults.find(t); d != m.defaults.end()) {
    auto it = m.lexicalized.find({t, unicode::to_lower(word)});
    return it != m.lexicalized.end() ? it->second : d->second;
  }
  if (auto s = m.simple.find(t); s != m.simple.end()) return s->second;
  throw ValidationError("unknown Penn tag '" + t +
                        "'; supported tags: " + join_tags(m.penn_tags()));
}

void map_tagged_stream(std::istream& in, std::ostream& out) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      out << '\n';
      continue;
    }
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw LoadError("expected 'word\\ttag'", line_no);
    }
    const std::string word = line.substr(0, tab);
    try {
      out << word << '\t' << map_penn_to_bis(line.substr(tab + 1), word) << '\n';
    } catch (const ValidationError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
}

}  // namespace lrlprep
