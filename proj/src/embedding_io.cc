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

#include "lrlprep/embedding_io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lrlprep/error.h"

namespace lrlprep {
namespace {

bool parse_header(const std::string& line, std::size_t& dim, std::size_t& tokens) {
  unsigned long long d = 0;
  unsigned long long n = 0;
  char tail = 0;
  if (std::sscanf(line.c_str(), " dim=%llu tokens=%llu %c", &d, &n, &tail) != 2) {
    return false;
  }
  dim = static_cast<std::size_t>(d);
  tokens = static_cast<std::size_t>(n);
  return dim > 0;
}

}  // namespace

void write_embedding_block(std::ostream& out, const EmbeddingSequence& seq) {
  out << "dim=" << seq.dim() << " tokens=" << seq.size() << '\n';
  char buf[32];
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto row = seq.row(j);
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
      if (k > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

std::vector<EmbeddingSequence> read_embedding_blocks(std::istream& in) {
  std::vector<EmbeddingSequence> blocks;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t dim = 0;
    std::size_t tokens = 0;
    if (!parse_header(line, dim, tokens)) {
      throw LoadError("expected 'dim=<d> tokens=<n>' header", line_no);
    }
    std::vector<double> data;
    data.reserve(dim * tokens);
    for (std::size_t j = 0; j < tokens; ++j) {
      if (!std::getline(in, line)) {
        throw LoadError("block ends after " + std::to_string(j) + " of " +
                            std::to_string(tokens) + " rows",
                        line_no);
      }
      ++line_no;
      std::istringstream row(line);
      std::string field;
      std::size_t k = 0;
      while (row >> field) {
        double v = 0;
        const auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
          throw LoadError("bad real '" + field + "'", line_no);
        }
        data.push_back(v);
        ++k;
      }
      if (k != dim) {
        throw LoadError("row has " + std::to_string(k) + " values, expected " +
                            std::to_string(dim),
                        line_no);
      }
    }
    blocks.emplace_back(dim, std::move(data));
  }
  return blocks;
}

std::vector<EmbeddingSequence> read_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open embedding file '" + path + "'");
  return read_embedding_blocks(in);
}

std::vector<AlignedEmbeddingPair> assemble_batch(
    std::vector<EmbeddingSequence> src, std::vector<EmbeddingSequence> tgt,
    std::vector<EmbeddingSequence> src_ref,
    std::vector<EmbeddingSequence> tgt_ref, const std::vector<WordEnds>& ends) {
  const std::size_t n = ends.size();
  if (src.size() != n || tgt.size() != n || src_ref.size() != n ||
      tgt_ref.size() != n) {
    throw ValidationError(
        "block counts differ: src=" + std::to_string(src.size()) +
        " tgt=" + std::to_string(tgt.size()) +
        " src_ref=" + std::to_string(src_ref.size()) +
        " tgt_ref=" + std::to_string(tgt_ref.size()) +
        " ends=" + std::to_string(n));
  }
  std::vector<AlignedEmbeddingPair> batch(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch[i].src = std::move(src[i]);
    batch[i].tgt = std::move(tgt[i]);
    batch[i].src_ref = std::move(src_ref[i]);
    batch[i].tgt_ref = std::move(tgt_ref[i]);
    batch[i].src_word_ends = ends[i].source;
    batch[i].tgt_word_ends = ends[i].target;
  }
  return batch;
}

}  // namespace lrlprep
