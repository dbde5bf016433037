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

// Embedding exchange format. A block is
//
//   dim=<d> tokens=<n>
//   <n rows of d whitespace-separated decimal reals>
//
// and a file is a sequence of blocks, one per sentence.

#ifndef LRLPREP_EMBEDDING_IO_H_
#define LRLPREP_EMBEDDING_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "lrlprep/align_kernel.h"
#include "lrlprep/aligned_pairs_io.h"

namespace lrlprep {

void write_embedding_block(std::ostream& out, const EmbeddingSequence& seq);
// Throws LoadError with the line number on malformed input.
std::vector<EmbeddingSequence> read_embedding_blocks(std::istream& in);
std::vector<EmbeddingSequence> read_embedding_file(const std::string& path);

// Zips four block files and a word-ends list into a batch. Throws
// ValidationError when the counts disagree.
std::vector<AlignedEmbeddingPair> assemble_batch(
    std::vector<EmbeddingSequence> src, std::vector<EmbeddingSequence> tgt,
    std::vector<EmbeddingSequence> src_ref,
    std::vector<EmbeddingSequence> tgt_ref, const std::vector<WordEnds>& ends);

}  // namespace lrlprep

#endif  // LRLPREP_EMBEDDING_IO_H_
