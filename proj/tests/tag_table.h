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

// The Penn -> BIS table written out row by row, one expectation per cell.
// Lexicalized tags are listed once per word plus once for an unlisted word.

#ifndef LRLPREP_TESTS_TAG_TABLE_H_
#define LRLPREP_TESTS_TAG_TABLE_H_

namespace lrlprep::testing {

struct TagRow {
  const char* tag;
  const char* word;
  const char* bis;
};

inline constexpr TagRow kTagTable[] = {
    {"CC", "and", "CC"},     {"CD", "3", "QT"},        {"EX", "there", "RD"},
    {"FW", "de", "RD"},      {"IN", "in", "PSP"},      {"JJ", "big", "JJ"},
    {"JJR", "bigger", "JJ"}, {"JJS", "biggest", "JJ"}, {"LS", "1", "QT"},
    {"MD", "can", "V"},      {"NN", "dog", "N"},       {"NNS", "dogs", "N"},
    {"NNP", "Delhi", "N"},   {"NNPS", "Alps", "N"},    {"POS", "'s", "PSP"},
    {"PRP", "he", "PR"},     {"PRP$", "his", "PR"},    {"RB", "fast", "RB"},
    {"RBR", "faster", "RB"}, {"RBS", "fastest", "RB"}, {"RP", "up", "RP"},
    {"SYM", "+", "RD"},      {"TO", "to", "RP"},       {"UH", "oh", "RP"},
    {"VB", "go", "V"},       {"VBD", "went", "V"},     {"VBG", "going", "V"},
    {"VBN", "gone", "V"},    {"VBP", "go", "V"},       {"VBZ", "goes", "V"},
    {"WP", "who", "PR"},     {"WP$", "whose", "PR"},   {"AFX", "pre", "RD"},
    {"-LRB-", "(", "RD"},    {"-RRB-", ")", "RD"},

    // Punctuation row.
    {"#", "#", "RD"},   {".", ".", "RD"},   {",", ",", "RD"},
    {"$", "$", "RD"},   {"“", "“", "RD"},   {"(", "(", "RD"},
    {")", ")", "RD"},   {":", ":", "RD"},   {"-", "-", "RD"},
    {"‘’", "‘’", "RD"}, {"‘", "‘", "RD"},   {"``", "``", "RD"},
    {"''", "''", "RD"},

    {"PDT", "all", "QT"},      {"PDT", "half", "QT"},     {"PDT", "such", "DM"},
    {"PDT", "quite", "QT"},

    {"WDT", "which", "PR"},    {"WDT", "that", "PR"},     {"WDT", "whatever", "RP"},
    {"WDT", "whichever", "PR"},

    {"DT", "some", "QT"},      {"DT", "every", "QT"},     {"DT", "both", "QT"},
    {"DT", "all", "QT"},       {"DT", "another", "QT"},   {"DT", "a", "QT"},
    {"DT", "an", "QT"},        {"DT", "this", "DM"},      {"DT", "these", "DM"},
    {"DT", "the", "DM"},       {"DT", "those", "PR"},     {"DT", "that", "PR"},
    {"DT", "no", "QT"},

    {"WRB", "how", "PR"},      {"WRB", "wherever", "PR"}, {"WRB", "when", "PR"},
    {"WRB", "where", "PR"},    {"WRB", "whenever", "RB"}, {"WRB", "why", "RB"},
    {"WRB", "whereby", "PR"},
};

}  // namespace lrlprep::testing

#endif  // LRLPREP_TESTS_TAG_TABLE_H_
