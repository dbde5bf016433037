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

// Penn Treebank -> BIS (top-level) part-of-speech tag conversion.

#ifndef LRLPREP_TAG_MAPPING_H_
#define LRLPREP_TAG_MAPPING_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrlprep {

struct TagMapping {
  std::map<std::string, std::string> simple;
  // (Penn tag, lowercased word) -> BIS tag
  std::map<std::pair<std::string, std::string>, std::string> lexicalized;
  // Fallback for the word-dependent tags PDT, WDT, DT, WRB.
  std::map<std::string, std::string> defaults;

  std::vector<std::string> penn_tags() const;
};

const TagMapping& penn_to_bis_mapping();

// Lexicalized lookup on (tag, lowercase(word)), then the tag's default, then
// the simple table. Throws ValidationError listing the supported tags for an
// unknown tag.
std::string map_penn_to_bis(std::string_view tag, std::string_view word);

// Rewrites `word\ttag` lines to `word\tBIS`; blank lines pass through.
// Throws LoadError naming the line on malformed input or unknown tags.
void map_tagged_stream(std::istream& in, std::ostream& out);

}  // namespace lrlprep

#endif  // LRLPREP_TAG_MAPPING_H_
