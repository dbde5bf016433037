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

#include "lrlprep/aligned_pairs_io.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lrlprep/error.h"

namespace lrlprep {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::size_t> parse_index_list(const std::string& text,
                                          std::size_t line_no) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      throw LoadError("bad index '" + token + "'", line_no);
    }
    if (used != token.size() || token.front() == '-') {
      throw LoadError("bad index '" + token + "'", line_no);
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void write_index_list(std::ostream& out, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ' ';
    out << v[i];
  }
}

}  // namespace

std::string pair_record_to_json(const AlignedPairRecord& record) {
  ordered_json j;
  j["src"] = record.pair.source_words;
  j["tgt"] = record.pair.target_words;
  auto align = ordered_json::array();
  for (const auto& [s, t] : record.pair.alignment) {
    align.push_back(ordered_json::array({s, t}));
  }
  j["align"] = std::move(align);
  j["prov"] = std::string(provenance_name(record.provenance));
  j["idx"] = record.index;
  return j.dump();
}

AlignedPairRecord pair_record_from_json(const std::string& line) {
  const auto j = ordered_json::parse(line);
  AlignedPairRecord record;
  record.pair.source_words = j.at("src").get<std::vector<std::string>>();
  record.pair.target_words = j.at("tgt").get<std::vector<std::string>>();
  for (const auto& a : j.at("align")) {
    if (!a.is_array() || a.size() != 2) {
      throw ValidationError("alignment entries must be [i, j] pairs");
    }
    record.pair.alignment.emplace_back(a[0].get<std::size_t>(),
                                       a[1].get<std::size_t>());
  }
  record.provenance = parse_provenance(j.at("prov").get<std::string>());
  record.index = j.at("idx").get<std::uint64_t>();
  return record;
}

void write_pairs_jsonl(std::ostream& out,
                       const std::vector<AlignedPairRecord>& records) {
  for (const auto& r : records) out << pair_record_to_json(r) << '\n';
}

std::vector<AlignedPairRecord> read_pairs_jsonl(std::istream& in) {
  std::vector<AlignedPairRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto record = pair_record_from_json(line);
      check_aligned_pair(record.pair);
      records.push_back(std::move(record));
    } catch (const nlohmann::json::exception& e) {
      throw LoadError(std::string("malformed pair record: ") + e.what(),
                      line_no);
    } catch (const ValidationError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
  return records;
}

void write_word_ends(std::ostream& out, const std::vector<WordEnds>& ends) {
  for (const auto& e : ends) {
    write_index_list(out, e.source);
    out << '\t';
    write_index_list(out, e.target);
    out << '\n';
  }
}

std::vector<WordEnds> read_word_ends(std::istream& in) {
  std::vector<WordEnds> ends;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw LoadError("expected two index lists separated by one tab", line_no);
    }
    ends.push_back({parse_index_list(line.substr(0, tab), line_no),
                    parse_index_list(line.substr(tab + 1), line_no)});
  }
  return ends;
}

}  // namespace lrlprep
