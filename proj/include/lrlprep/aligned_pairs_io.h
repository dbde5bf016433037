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

// Pair files (JSON Lines) and their word-end companions (.ends).
//
//   {"src":["..."],"tgt":["..."],"align":[[0,0],...],"prov":"R_to_L","idx":0}
//
// A .ends line holds the source and target word-end token indices as two
// space-separated lists joined by a tab: "0 2 3\t1 2 4".

#ifndef LRLPREP_ALIGNED_PAIRS_IO_H_
#define LRLPREP_ALIGNED_PAIRS_IO_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrlprep/pseudo_translate.h"

namespace lrlprep {

std::string pair_record_to_json(const AlignedPairRecord& record);
AlignedPairRecord pair_record_from_json(const std::string& line);

void write_pairs_jsonl(std::ostream& out,
                       const std::vector<AlignedPairRecord>& records);
// Throws LoadError with the line number on malformed records, and
// ValidationError-derived LoadError when a record is not diagonal.
std::vector<AlignedPairRecord> read_pairs_jsonl(std::istream& in);

struct WordEnds {
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
};

void write_word_ends(std::ostream& out, const std::vector<WordEnds>& ends);
std::vector<WordEnds> read_word_ends(std::istream& in);

}  // namespace lrlprep

#endif  // LRLPREP_ALIGNED_PAIRS_IO_H_
