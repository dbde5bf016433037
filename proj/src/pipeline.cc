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

#include "lrlprep/pipeline.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lrlprep/aligned_pairs_io.h"
#include "lrlprep/corpus.h"
#include "lrlprep/lexicon.h"
#include "lrlprep/subword_vocab.h"

namespace lrlprep {
namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw StageError(Stage::kConfig,
                     key + " must be a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw StageError(Stage::kConfig, key + " must be true or false");
}

std::size_t count_lines(const std::string& content) {
  return static_cast<std::size_t>(
      std::count(content.begin(), content.end(), '\n'));
}

// Output directory that forgets nothing: every file written through it is
// remembered so a failed run can be rolled back.
class OutputTree {
 public:
  explicit OutputTree(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    if (!fs::exists(root_, ec)) {
      fs::create_directories(root_, ec);
      if (ec) {
        throw StageError(Stage::kConfig, "cannot create output directory '" +
                                             root_.string() + "': " + ec.message());
      }
      created_ = true;
    } else if (!fs::is_directory(root_, ec)) {
      throw StageError(Stage::kConfig,
                       "output path '" + root_.string() + "' is not a directory");
    }
  }

  void write(Stage stage, const std::string& name,
             const std::function<void(std::ostream&)>& body) {
    std::ostringstream buffer;
    body(buffer);
    const std::string content = buffer.str();
    const fs::path path = root_ / name;
    written_.push_back(path);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
      throw StageError(stage, "cannot write '" + path.string() + "'");
    }
    entries_.push_back({name, count_lines(content)});
  }

  void write_unlisted(Stage stage, const std::string& name,
                      const std::string& content) {
    const fs::path path = root_ / name;
    written_.push_back(path);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw StageError(stage, "cannot write '" + path.string() + "'");
  }

  void roll_back() noexcept {
    std::error_code ec;
    for (const auto& p : written_) fs::remove(p, ec);
    if (created_) fs::remove(root_, ec);
  }

  const std::vector<ManifestEntry>& entries() const { return entries_; }

 private:
  fs::path root_;
  bool created_ = false;
  std::vector<fs::path> written_;
  std::vector<ManifestEntry> entries_;
};

// Runs `fn`, re-throwing any library error as a StageError for `stage`.
template <typename Fn>
auto in_stage(Stage stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

Lexicon load_union(const std::vector<std::string>& paths,
                   const LexiconDirection& direction, std::ostream* log) {
  Lexicon merged(direction);
  for (const auto& path : paths) {
    auto loaded = load_lexicon_file(path, direction);
    if (log != nullptr) {
      *log << "lexicon " << path << ": " << loaded.lexicon.size()
           << " entries, " << loaded.skipped_count
           << " multi-word pairs skipped\n";
    }
    merged = merge_lexicons(merged, loaded.lexicon);
  }
  return merged;
}

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kConfig:
      return "config";
    case Stage::kTransliteration:
      return "transliteration";
    case Stage::kLexicon:
      return "lexicon-load";
    case Stage::kPseudoTranslation:
      return "pseudo-translation";
    case Stage::kVocab:
      return "vocab";
    case Stage::kMetrics:
      return "metrics";
  }
  return "unknown";
}

const std::vector<std::string>& pipeline_config_keys() {
  static const std::vector<std::string> keys = {
      "rpl_corpus",     "lrl_corpus",     "lex_lrl_to_rpl", "lex_rpl_to_lrl",
      "exceptions",     "lrl_script",     "rpl_script",     "passthrough",
      "strategy",       "seed",           "lrl_vocab_size", "rpl_vocab_size",
      "min_pair_count", "base_vocab",     "base_merges",    "vocab_on_raw",
      "heldout_lrl",    "heldout_rpl",    "output_dir",
  };
  return keys;
}

ConfigMap parse_config(std::istream& in) {
  ConfigMap values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw LoadError("expected 'key = value'", line_no);
    }
    const std::string key(trim(body.substr(0, eq)));
    if (key.empty()) throw LoadError("empty key", line_no);
    values[key] = std::string(trim(body.substr(eq + 1)));
  }
  return values;
}

PipelineConfig config_from_map(const ConfigMap& values) {
  const auto& known = pipeline_config_keys();
  for (const auto& [key, value] : values) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw StageError(Stage::kConfig, "unknown key '" + key + "'");
    }
  }
  const auto get = [&](const std::string& key) -> const std::string* {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  PipelineConfig c;
  try {
    if (auto v = get("rpl_corpus")) c.rpl_corpus = *v;
    if (auto v = get("lrl_corpus")) c.lrl_corpus = *v;
    if (auto v = get("lex_lrl_to_rpl")) c.lex_lrl_to_rpl = split_list(*v);
    if (auto v = get("lex_rpl_to_lrl")) c.lex_rpl_to_lrl = split_list(*v);
    if (auto v = get("exceptions")) c.exceptions = *v;
    if (auto v = get("lrl_script")) c.lrl_script = parse_script(*v);
    if (auto v = get("rpl_script")) c.rpl_script = parse_script(*v);
    if (auto v = get("passthrough")) c.passthrough = parse_passthrough_policy(*v);
    if (auto v = get("strategy")) c.strategy = parse_lookup_strategy(*v);
    if (auto v = get("seed")) c.seed = parse_unsigned("seed", *v);
    if (auto v = get("lrl_vocab_size")) c.lrl_vocab_size = parse_unsigned("lrl_vocab_size", *v);
    if (auto v = get("rpl_vocab_size")) c.rpl_vocab_size = parse_unsigned("rpl_vocab_size", *v);
    if (auto v = get("min_pair_count")) c.min_pair_count = parse_unsigned("min_pair_count", *v);
    if (auto v = get("base_vocab")) c.base_vocab = *v;
    if (auto v = get("base_merges")) c.base_merges = *v;
    if (auto v = get("vocab_on_raw")) c.vocab_on_raw = parse_bool("vocab_on_raw", *v);
    if (auto v = get("heldout_lrl")) c.heldout_lrl = *v;
    if (auto v = get("heldout_rpl")) c.heldout_rpl = *v;
    if (auto v = get("output_dir")) c.output_dir = *v;
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(Stage::kConfig, e.what());
  }
  validate_config(c);
  return c;
}

void validate_config(const PipelineConfig& c) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw StageError(Stage::kConfig, what);
  };
  require(!c.rpl_corpus.empty(), "rpl_corpus is required");
  require(!c.lrl_corpus.empty(), "lrl_corpus is required");
  require(!c.lex_lrl_to_rpl.empty(), "lex_lrl_to_rpl is required");
  require(!c.lex_rpl_to_lrl.empty(), "lex_rpl_to_lrl is required");
  require(!c.output_dir.empty(), "output_dir is required");
  require(c.lrl_vocab_size >= 1, "lrl_vocab_size must be at least 1");
  require(!c.base_vocab.empty() || c.rpl_vocab_size >= 1,
          "rpl_vocab_size must be at least 1");
  require(c.heldout_lrl.empty() == c.heldout_rpl.empty(),
          "heldout_lrl and heldout_rpl must be given together");
  require(c.base_merges.empty() || !c.base_vocab.empty(),
          "base_merges needs base_vocab");
}

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream* log) {
  validate_config(config);
  OutputTree out(config.output_dir);
  PipelineResult result;
  const auto note = [log](const std::string& msg) {
    if (log != nullptr) *log << msg << '\n';
  };

  try {
    // 1. Transliteration of D_L into the RPL script.
    const bool same_script = config.lrl_script == config.rpl_script;
    std::optional<TransliterationTable> table;
    Corpus rpl_corpus;
    Corpus lrl_raw;
    Corpus lrl_corpus;
    in_stage(Stage::kTransliteration, [&] {
      rpl_corpus = read_corpus_file(config.rpl_corpus, "rpl");
      lrl_raw = read_corpus_file(config.lrl_corpus, "lrl");
      if (same_script) {
        if (!config.exceptions.empty()) {
          throw StageError(Stage::kConfig,
                           "exceptions given but LRL and RPL share a script");
        }
        lrl_corpus = lrl_raw;
        note("transliteration: scripts already match, skipped");
        return;
      }
      std::ifstream rules;
      if (!config.exceptions.empty()) {
        rules.open(config.exceptions, std::ios::binary);
        if (!rules) throw LoadError("cannot open exception file '" + config.exceptions + "'");
      }
      table.emplace(build_table(config.lrl_script, config.rpl_script,
                                config.exceptions.empty() ? nullptr : &rules,
                                config.passthrough));
      auto translit = transliterate_corpus(lrl_raw, *table);
      lrl_corpus = std::move(translit.corpus);
      const auto& r = translit.report;
      note("transliteration: mapped=" + std::to_string(r.mapped_count) +
           " exception=" + std::to_string(r.exception_count) +
           " passthrough=" + std::to_string(r.passthrough_count));
    });
    out.write(Stage::kTransliteration, "lrl_translit.txt",
              [&](std::ostream& os) { write_corpus(os, lrl_corpus); });

    // 1b-3. Lexicons into the RPL script, frequencies, weights.
    WeightedLexicon weighted_lr_to_r;
    WeightedLexicon weighted_r_to_lr;
    in_stage(Stage::kLexicon, [&] {
      Lexicon l_to_r = load_union(config.lex_lrl_to_rpl, {"lrl", "rpl"}, log);
      Lexicon r_to_l = load_union(config.lex_rpl_to_lrl, {"rpl", "lrl"}, log);
      if (table) {
        l_to_r = transliterate_lexicon(l_to_r, *table, LexiconSide::kSource);
        r_to_l = transliterate_lexicon(r_to_l, *table, LexiconSide::kTarget);
      }
      const FrequencyTable freq_rpl = build_frequency_table(rpl_corpus);
      const FrequencyTable freq_lrl = build_frequency_table(lrl_corpus);
      out.write(Stage::kLexicon, "lexicon_lr_to_r.tsv",
                [&](std::ostream& os) { write_lexicon(os, l_to_r); });
      out.write(Stage::kLexicon, "lexicon_r_to_lr.tsv",
                [&](std::ostream& os) { write_lexicon(os, r_to_l); });
      out.write(Stage::kLexicon, "freq_rpl.tsv",
                [&](std::ostream& os) { write_frequency_table(os, freq_rpl); });
      out.write(Stage::kLexicon, "freq_lrl_translit.tsv",
                [&](std::ostream& os) { write_frequency_table(os, freq_lrl); });
      weighted_lr_to_r = weight_lexicon(l_to_r, freq_rpl);
      weighted_r_to_lr = weight_lexicon(r_to_l, freq_lrl);
    });

    // 4. Pseudo-parallel corpus P.
    AlignedPairSet pairs;
    in_stage(Stage::kPseudoTranslation, [&] {
      pairs = build_pseudo_parallel(rpl_corpus, lrl_corpus, weighted_r_to_lr,
                                    weighted_lr_to_r, config.strategy,
                                    config.seed);
      for (const auto& r : pairs.records) check_aligned_pair(r.pair);
    });
    out.write(Stage::kPseudoTranslation, "pairs.jsonl",
              [&](std::ostream& os) { write_pairs_jsonl(os, pairs.records); });
    result.pair_count = pairs.records.size();
    note("pseudo-translation: " + std::to_string(pairs.records.size()) + " pairs");

    // 5. Vocabulary induction and extension.
    in_stage(Stage::kVocab, [&] {
      const TrainOptions options{config.min_pair_count};
      const Corpus& vocab_source = config.vocab_on_raw ? lrl_raw : lrl_corpus;
      const SubwordVocab lrl_vocab = train_vocab(
          build_frequency_table(vocab_source), config.lrl_vocab_size, options);
      SubwordVocab base;
      if (!config.base_vocab.empty()) {
        base = read_vocab_file(config.base_vocab, config.base_merges);
      } else {
        base = train_vocab(build_frequency_table(rpl_corpus),
                           config.rpl_vocab_size, options);
        out.write(Stage::kVocab, "base_vocab.txt",
                  [&](std::ostream& os) { write_vocab(os, base); });
        out.write(Stage::kVocab, "base_merges.txt",
                  [&](std::ostream& os) { write_merges(os, base); });
      }
      const SubwordVocab extended = extend_vocab(base, lrl_vocab);
      out.write(Stage::kVocab, "lrl_vocab.txt",
                [&](std::ostream& os) { write_vocab(os, lrl_vocab); });
      out.write(Stage::kVocab, "lrl_merges.txt",
                [&](std::ostream& os) { write_merges(os, lrl_vocab); });
      out.write(Stage::kVocab, "vocab.txt",
                [&](std::ostream& os) { write_vocab(os, extended); });
      out.write(Stage::kVocab, "merges.txt",
                [&](std::ostream& os) { write_merges(os, extended); });

      std::vector<WordEnds> ends;
      ends.reserve(pairs.records.size());
      for (const auto& r : pairs.records) {
        ends.push_back({encode_words(r.pair.source_words, extended).word_end_indices,
                        encode_words(r.pair.target_words, extended).word_end_indices});
      }
      out.write(Stage::kVocab, "pairs.ends",
                [&](std::ostream& os) { write_word_ends(os, ends); });
      note("vocab: lrl=" + std::to_string(lrl_vocab.size()) +
           " base=" + std::to_string(base.size()) +
           " extended=" + std::to_string(extended.size()));
    });

    // 6. Diagnostics.
    in_stage(Stage::kMetrics, [&] {
      std::ostringstream report;
      result.overlap = word_overlap(lrl_corpus, rpl_corpus);
      report << format_overlap(result.overlap) << '\n';
      if (!config.heldout_lrl.empty()) {
        Corpus held_lrl = read_corpus_file(config.heldout_lrl, "lrl");
        const Corpus held_rpl = read_corpus_file(config.heldout_rpl, "rpl");
        if (table) held_lrl = transliterate_corpus(held_lrl, *table).corpus;
        Corpus hyp;
        for (const auto& r : pseudo_translate_corpus(held_lrl, weighted_lr_to_r,
                                                     config.strategy, config.seed,
                                                     Provenance::kLRToR)) {
          std::string line;
          for (const auto& w : r.pair.target_words) {
            if (!line.empty()) line += ' ';
            line += w;
          }
          hyp.lines.push_back(std::move(line));
        }
        result.bleu = corpus_bleu(hyp, held_rpl);
        report << format_bleu(*result.bleu) << '\n';
      }
      out.write(Stage::kMetrics, "diagnostics.txt",
                [&](std::ostream& os) { os << report.str(); });
      std::string text = report.str();
      text.pop_back();
      note(text);
    });

    nlohmann::ordered_json manifest;
    manifest["seed"] = config.seed;
    manifest["files"] = nlohmann::ordered_json::array();
    for (const auto& e : out.entries()) {
      manifest["files"].push_back({{"name", e.name}, {"lines", e.lines}});
    }
    out.write_unlisted(Stage::kMetrics, "manifest.json", manifest.dump(2) + "\n");
    result.files = out.entries();
  } catch (...) {
    out.roll_back();
    throw;
  }
  return result;
}

}  // namespace lrlprep
