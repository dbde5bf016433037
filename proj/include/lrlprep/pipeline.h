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

// End-to-end corpus preparation:
//
//   1. transliterate the LRL corpus and both lexicons into the RPL script
//   2. count word frequencies of D_R and D_L_R
//   3. weight both lexicons with target-side frequencies
//   4. pseudo-translate both corpora and write the union as pairs.jsonl
//   5. train the LRL subword vocabulary, extend the base vocabulary with it
//      and write the word-end indices of every pair under the result
//   6. report word overlap and, given a held-out parallel sample, BLEU
//
// Every file lands in the output directory and is listed with its line
// count in manifest.json. A failing stage removes whatever was written.

#ifndef LRLPREP_PIPELINE_H_
#define LRLPREP_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrlprep/error.h"
#include "lrlprep/metrics.h"
#include "lrlprep/pseudo_translate.h"
#include "lrlprep/script.h"
#include "lrlprep/script_translit.h"

namespace lrlprep {

enum class Stage {
  kConfig = 10,
  kTransliteration = 20,
  kLexicon = 30,
  kPseudoTranslation = 40,
  kVocab = 50,
  kMetrics = 60,
};

std::string_view stage_name(Stage stage);
inline int exit_code(Stage stage) { return static_cast<int>(stage); }

class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& what)
      : Error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

struct PipelineConfig {
  std::string rpl_corpus;
  std::string lrl_corpus;
  std::vector<std::string> lex_lrl_to_rpl;  // unioned in order
  std::vector<std::string> lex_rpl_to_lrl;
  std::string exceptions;  // optional exception rules, LRL -> RPL script
  Script lrl_script = Script::kOriya;
  Script rpl_script = Script::kDevanagari;
  PassthroughPolicy passthrough = PassthroughPolicy::kCopy;
  LookupStrategy strategy = LookupStrategy::kWeighted;
  std::uint64_t seed = 0;
  std::size_t lrl_vocab_size = 10000;
  std::size_t rpl_vocab_size = 20000;  // only used without base_vocab
  std::uint64_t min_pair_count = 2;
  std::string base_vocab;   // optional; trained on D_R when empty
  std::string base_merges;  // optional
  bool vocab_on_raw = false;  // train the LRL vocab on D_L instead of D_L_R
  std::string heldout_lrl;  // optional parallel sample for BLEU
  std::string heldout_rpl;
  std::string output_dir;
};

using ConfigMap = std::map<std::string, std::string>;

// Keys every config file and matching CLI flag may set.
const std::vector<std::string>& pipeline_config_keys();

// `key = value` lines; '#' starts a comment line. Throws LoadError.
ConfigMap parse_config(std::istream& in);

// Throws StageError(kConfig) for unknown keys, unparsable values, missing
// required keys or a vocabulary size below 1.
PipelineConfig config_from_map(const ConfigMap& values);
void validate_config(const PipelineConfig& config);

struct ManifestEntry {
  std::string name;
  std::size_t lines;
};

struct PipelineResult {
  std::vector<ManifestEntry> files;
  std::size_t pair_count = 0;
  OverlapResult overlap;
  std::optional<BleuResult> bleu;
};

// Throws StageError naming the failing stage; nothing written survives it.
PipelineResult run_pipeline(const PipelineConfig& config,
                            std::ostream* log = nullptr);

}  // namespace lrlprep

#endif  // LRLPREP_PIPELINE_H_
