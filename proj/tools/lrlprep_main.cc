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

// lrlprep: corpus preparation for a low web-resource language (LRL) and a
// related prominent language (RPL).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrlprep/align_kernel.h"
#include "lrlprep/aligned_pairs_io.h"
#include "lrlprep/corpus.h"
#include "lrlprep/embedding_io.h"
#include "lrlprep/error.h"
#include "lrlprep/lexicon.h"
#include "lrlprep/metrics.h"
#include "lrlprep/pipeline.h"
#include "lrlprep/pseudo_translate.h"
#include "lrlprep/script_translit.h"
#include "lrlprep/subword_vocab.h"
#include "lrlprep/tag_mapping.h"

namespace {

using namespace lrlprep;

constexpr int kGenericFailure = 1;

constexpr const char* kSeedingHelp =
    "Seeding: sentence i of direction P draws from a SplitMix64 stream seeded "
    "with mix64(mix64(seed ^ salt(P)) + i), where salt(R_to_L) = "
    "0x52544F4C00000001 and salt(LR_to_R) = 0x4C52544F00000002.";

// Writes to `path`, or stdout for "" and "-".
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LoadError("cannot open '" + path + "' for writing");
  body(out);
  out.close();
  if (!out) throw LoadError("cannot write '" + path + "'");
}

Corpus read_input_corpus(const std::string& path, const std::string& tag) {
  if (path.empty() || path == "-") return ingest_corpus(std::cin, tag);
  return read_corpus_file(path, tag);
}

Lexicon load_lexicons(const std::vector<std::string>& paths,
                      const LexiconDirection& direction) {
  Lexicon merged(direction);
  for (const auto& p : paths) {
    auto loaded = load_lexicon_file(p, direction);
    if (loaded.skipped_count > 0) {
      std::cerr << p << ": skipped " << loaded.skipped_count
                << " multi-word pairs\n";
    }
    merged = merge_lexicons(merged, loaded.lexicon);
  }
  return merged;
}

// Runs a subcommand body, turning exceptions into `code` with a message.
int guarded(int code, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.stage());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus preparation for a low web-resource language (LRL) "
               "and a related prominent language (RPL)."};
  app.require_subcommand(1);
  app.footer(kSeedingHelp);
  int status = 0;

  // translit -----------------------------------------------------------------
  struct {
    std::string from, to, input, output, exceptions, policy = "copy", report;
  } tr;
  auto* translit = app.add_subcommand("translit",
                                      "Map text between Brahmic Unicode blocks");
  translit->add_option("--from", tr.from, "Source script")->required();
  translit->add_option("--to", tr.to, "Target script")->required();
  translit->add_option("-i,--input", tr.input, "Input corpus (default stdin)");
  translit->add_option("-o,--output", tr.output, "Output (default stdout)");
  translit->add_option("--exceptions", tr.exceptions,
                       "Exception rules: '<src hex>\\t<dst hex> ...' per line");
  translit->add_option("--passthrough", tr.policy,
                       "In-block codepoints without an assigned image: "
                       "copy, drop or mark (U+FFFD)");
  translit->add_option("--report", tr.report, "Write counts to this file");
  translit->callback([&] {
    status = guarded(exit_code(Stage::kTransliteration), [&] {
      std::ifstream rules;
      if (!tr.exceptions.empty()) {
        rules.open(tr.exceptions, std::ios::binary);
        if (!rules) throw LoadError("cannot open '" + tr.exceptions + "'");
      }
      const auto table = build_table(parse_script(tr.from), parse_script(tr.to),
                                     tr.exceptions.empty() ? nullptr : &rules,
                                     parse_passthrough_policy(tr.policy));
      const auto result = transliterate_corpus(read_input_corpus(tr.input, "src"), table);
      with_output(tr.output,
                  [&](std::ostream& os) { write_corpus(os, result.corpus); });
      if (!tr.report.empty()) {
        with_output(tr.report, [&](std::ostream& os) {
          const auto& r = result.report;
          os << "mapped=" << r.mapped_count << " exception=" << r.exception_count
             << " passthrough=" << r.passthrough_count << '\n';
          for (char32_t cp : r.passthrough_codepoints) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
            os << buf << '\n';
          }
        });
      }
    });
  });

  // pseudo-translate ---------------------------------------------------------
  struct {
    std::vector<std::string> lexicons;
    std::string input, output, weights_corpus, strategy = "weighted",
                                                direction = "LR_to_R";
    std::uint64_t seed = 0;
  } pt;
  auto* pseudo = app.add_subcommand(
      "pseudo-translate", "Word-by-word translation with a bilingual lexicon");
  pseudo->add_option("-l,--lexicon", pt.lexicons,
                     "Lexicon TSV, source\\ttarget; repeat to union")
      ->required();
  pseudo->add_option("-i,--input", pt.input, "Input corpus (default stdin)");
  pseudo->add_option("-o,--output", pt.output, "pairs.jsonl (default stdout)");
  pseudo->add_option("--weights-corpus", pt.weights_corpus,
                     "Target-language corpus for candidate weights; "
                     "uniform weights when absent");
  pseudo->add_option("--strategy", pt.strategy,
                     "first, max, weighted or root_weighted");
  pseudo->add_option("--direction", pt.direction,
                     "Provenance label, R_to_L or LR_to_R");
  pseudo->add_option("--seed", pt.seed, "Base seed");
  pseudo->footer(kSeedingHelp);
  pseudo->callback([&] {
    status = guarded(exit_code(Stage::kPseudoTranslation), [&] {
      const Provenance prov = parse_provenance(pt.direction);
      const Lexicon lex = load_lexicons(pt.lexicons, {"src", "tgt"});
      const WeightedLexicon weighted =
          pt.weights_corpus.empty()
              ? uniform_weights(lex)
              : weight_lexicon(lex, build_frequency_table(
                                        read_corpus_file(pt.weights_corpus, "tgt")));
      const auto records = pseudo_translate_corpus(
          read_input_corpus(pt.input, "src"), weighted,
          parse_lookup_strategy(pt.strategy), pt.seed, prov);
      with_output(pt.output,
                  [&](std::ostream& os) { write_pairs_jsonl(os, records); });
    });
  });

  // overlap ------------------------------------------------------------------
  std::string ov_lrl, ov_rpl;
  auto* overlap = app.add_subcommand(
      "overlap", "Share of distinct LRL words also present in the RPL corpus");
  overlap->add_option("--lrl", ov_lrl, "Transliterated LRL corpus")->required();
  overlap->add_option("--rpl", ov_rpl, "RPL corpus")->required();
  overlap->callback([&] {
    status = guarded(exit_code(Stage::kMetrics), [&] {
      std::cout << format_overlap(word_overlap(read_corpus_file(ov_lrl, "lrl"),
                                               read_corpus_file(ov_rpl, "rpl")))
                << '\n';
    });
  });

  // bleu ---------------------------------------------------------------------
  std::string bl_hyp, bl_ref;
  auto* bleu = app.add_subcommand("bleu", "Corpus BLEU-4, one reference per line");
  bleu->add_option("--hyp", bl_hyp, "Hypotheses")->required();
  bleu->add_option("--ref", bl_ref, "References")->required();
  bleu->callback([&] {
    status = guarded(exit_code(Stage::kMetrics), [&] {
      std::cout << format_bleu(corpus_bleu(read_corpus_file(bl_hyp, "hyp"),
                                           read_corpus_file(bl_ref, "ref")))
                << '\n';
    });
  });

  // vocab-train --------------------------------------------------------------
  struct {
    std::string corpus, vocab_out, merges_out;
    std::size_t size = 0;
    std::uint64_t min_pair_count = 2;
  } vt;
  auto* vtrain = app.add_subcommand("vocab-train",
                                    "Train a ##-prefixed subword vocabulary");
  vtrain->add_option("-i,--corpus", vt.corpus, "Training corpus")->required();
  vtrain->add_option("--size", vt.size, "Target size, excluding [UNK]")
      ->required();
  vtrain->add_option("--min-pair-count", vt.min_pair_count,
                     "Stop once the best pair is rarer than this");
  vtrain->add_option("--vocab-out", vt.vocab_out, "Tokens, one per line")
      ->required();
  vtrain->add_option("--merges-out", vt.merges_out, "Merges, 'left right'");
  vtrain->callback([&] {
    status = guarded(exit_code(Stage::kVocab), [&] {
      const auto vocab = train_vocab(build_frequency_table(read_corpus_file(vt.corpus, "x")),
                                     vt.size, TrainOptions{vt.min_pair_count});
      with_output(vt.vocab_out, [&](std::ostream& os) { write_vocab(os, vocab); });
      if (!vt.merges_out.empty()) {
        with_output(vt.merges_out, [&](std::ostream& os) { write_merges(os, vocab); });
      }
    });
  });

  // vocab-extend -------------------------------------------------------------
  struct {
    std::string base, base_merges, added, added_merges, vocab_out, merges_out;
  } ve;
  auto* vextend = app.add_subcommand(
      "vocab-extend", "Append the tokens of one vocabulary to another");
  vextend->add_option("--base", ve.base, "Base vocabulary")->required();
  vextend->add_option("--base-merges", ve.base_merges, "Base merges");
  vextend->add_option("--added", ve.added, "Vocabulary to append")->required();
  vextend->add_option("--added-merges", ve.added_merges, "Its merges");
  vextend->add_option("--vocab-out", ve.vocab_out, "Result")->required();
  vextend->add_option("--merges-out", ve.merges_out, "Result merges");
  vextend->callback([&] {
    status = guarded(exit_code(Stage::kVocab), [&] {
      const auto ext = extend_vocab(read_vocab_file(ve.base, ve.base_merges),
                                    read_vocab_file(ve.added, ve.added_merges));
      with_output(ve.vocab_out, [&](std::ostream& os) { write_vocab(os, ext); });
      if (!ve.merges_out.empty()) {
        with_output(ve.merges_out, [&](std::ostream& os) { write_merges(os, ext); });
      }
    });
  });

  // align-loss ---------------------------------------------------------------
  struct {
    std::string src, tgt, src_ref, tgt_ref, ends, objective = "mse";
    double reg = 1.0, temperature = 0.1, fd_epsilon = 0.0;
  } al;
  auto* align = app.add_subcommand(
      "align-loss", "Evaluate the embedding alignment objective on a batch");
  align->add_option("--src", al.src, "Fine-tuned source embeddings")->required();
  align->add_option("--tgt", al.tgt, "Fine-tuned target embeddings")->required();
  align->add_option("--src-ref", al.src_ref, "Frozen source embeddings")->required();
  align->add_option("--tgt-ref", al.tgt_ref, "Frozen target embeddings")->required();
  align->add_option("--ends", al.ends, "Word-end token indices (.ends)")->required();
  align->add_option("--objective", al.objective, "mse or contrastive");
  align->add_option("--reg", al.reg, "Regularization coefficient");
  align->add_option("--temperature", al.temperature, "Contrastive temperature");
  align->add_option("--fd-check", al.fd_epsilon,
                    "Also print the finite-difference gradient error at this step");
  align->callback([&] {
    status = guarded(kGenericFailure, [&] {
      std::ifstream ends_in(al.ends);
      if (!ends_in) throw LoadError("cannot open '" + al.ends + "'");
      const auto batch = assemble_batch(
          read_embedding_file(al.src), read_embedding_file(al.tgt),
          read_embedding_file(al.src_ref), read_embedding_file(al.tgt_ref),
          read_word_ends(ends_in));
      const ObjectiveConfig cfg{parse_objective(al.objective), al.reg,
                                al.temperature};
      const LossReport r = alignment_loss(batch, cfg);
      std::printf("loss: align=%.12g reg=%.12g total=%.12g\n", r.align_loss,
                  r.reg_loss, r.total);
      if (al.fd_epsilon > 0) {
        std::printf("fd-check: max_rel_error=%.6g\n",
                    finite_difference_check(batch, cfg, al.fd_epsilon));
      }
    });
  });

  // map-tags -----------------------------------------------------------------
  std::string mt_input, mt_output;
  auto* maptags = app.add_subcommand(
      "map-tags", "Rewrite 'word\\tPennTag' lines to top-level BIS tags");
  maptags->add_option("-i,--input", mt_input, "Input (default stdin)");
  maptags->add_option("-o,--output", mt_output, "Output (default stdout)");
  maptags->callback([&] {
    status = guarded(kGenericFailure, [&] {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (!mt_input.empty() && mt_input != "-") {
        file.open(mt_input, std::ios::binary);
        if (!file) throw LoadError("cannot open '" + mt_input + "'");
        in = &file;
      }
      with_output(mt_output, [&](std::ostream& os) { map_tagged_stream(*in, os); });
    });
  });

  // pipeline -----------------------------------------------------------------
  std::string config_path;
  std::map<std::string, std::string> overrides;
  auto* pipeline = app.add_subcommand(
      "pipeline", "Run every stage; flags override config file keys");
  pipeline->add_option("-c,--config", config_path, "key = value config file");
  for (const auto& key : pipeline_config_keys()) {
    pipeline->add_option_function<std::string>(
        "--" + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
        "Overrides '" + key + "'");
  }
  pipeline->footer(kSeedingHelp);
  pipeline->callback([&] {
    status = guarded(exit_code(Stage::kConfig), [&] {
      ConfigMap values;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw StageError(Stage::kConfig, "cannot open '" + config_path + "'");
        try {
          values = parse_config(in);
        } catch (const LoadError& e) {
          throw StageError(Stage::kConfig, config_path + ": " + e.what());
        }
      }
      for (const auto& [k, v] : overrides) values[k] = v;
      const PipelineResult r = run_pipeline(config_from_map(values), &std::cerr);
      std::cout << "pairs: " << r.pair_count << '\n'
                << format_overlap(r.overlap) << '\n';
      if (r.bleu) std::cout << format_bleu(*r.bleu) << '\n';
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(Stage::kConfig);
  }
  return status;
}
