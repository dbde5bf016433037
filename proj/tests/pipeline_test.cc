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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lrlprep/aligned_pairs_io.h"
#include "pipeline_fixture.h"

namespace lrlprep {
namespace {

namespace fs = std::filesystem;
using testing::read_file;
using testing::scratch_dir;
using testing::toy_config;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = scratch_dir("pipeline"); }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(PipelineTest, ManifestListsEveryFileWithLineCounts) {
  const PipelineConfig c = toy_config(dir_);
  const auto r = run_pipeline(c);
  EXPECT_EQ(r.pair_count, 10u);

  const fs::path out = c.output_dir;
  const auto manifest = nlohmann::json::parse(read_file(out / "manifest.json"));
  EXPECT_EQ(manifest["seed"], 1234);
  std::set<std::string> listed;
  for (const auto& f : manifest["files"]) {
    const std::string name = f["name"];
    listed.insert(name);
    const std::string body = read_file(out / name);
    EXPECT_EQ(f["lines"].get<std::size_t>(),
              static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n')))
        << name;
    if (name == "pairs.jsonl") EXPECT_EQ(f["lines"], 10);
  }
  for (const auto& e : fs::directory_iterator(out)) {
    const std::string name = e.path().filename().string();
    if (name != "manifest.json") EXPECT_TRUE(listed.count(name)) << name;
  }
  EXPECT_TRUE(r.bleu.has_value());
}

TEST_F(PipelineTest, OutputsAreConsistent) {
  const PipelineConfig c = toy_config(dir_);
  run_pipeline(c);
  const fs::path out = c.output_dir;

  // The transliterated corpus is in Devanagari.
  EXPECT_EQ(read_corpus_file((out / "lrl_translit.txt").string(), "x").script,
            Script::kDevanagari);

  std::istringstream pairs(read_file(out / "pairs.jsonl"));
  const auto records = read_pairs_jsonl(pairs);
  std::istringstream ends_in(read_file(out / "pairs.ends"));
  const auto ends = read_word_ends(ends_in);
  ASSERT_EQ(ends.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(ends[i].source.size(), records[i].pair.source_words.size());
    EXPECT_EQ(ends[i].target.size(), records[i].pair.target_words.size());
  }
  // The LRL word for "book" reaches the RPL side through the lexicon.
  bool saw_book = false;
  for (const auto& r : records) {
    if (r.provenance != Provenance::kLRToR) continue;
    for (const auto& w : r.pair.target_words) saw_book |= w == "किताब";
  }
  EXPECT_TRUE(saw_book);
}

TEST_F(PipelineTest, MissingLexiconFailsInLexiconStageAndLeavesNothing) {
  PipelineConfig c = toy_config(dir_);
  c.lex_lrl_to_rpl = {(dir_ / "missing.tsv").string()};
  try {
    run_pipeline(c);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), Stage::kLexicon);
    EXPECT_EQ(exit_code(e.stage()), 30);
  }
  EXPECT_FALSE(fs::exists(c.output_dir));
}

TEST_F(PipelineTest, FailureKeepsPreexistingDirectory) {
  PipelineConfig c = toy_config(dir_);
  fs::create_directories(c.output_dir);
  testing::write_file(fs::path(c.output_dir) / "keep.txt", "x\n");
  c.lrl_vocab_size = 1;  // below the alphabet size
  try {
    run_pipeline(c);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), Stage::kVocab);
  }
  EXPECT_EQ(testing::tree_contents(c.output_dir).size(), 1u);
}

TEST_F(PipelineTest, SameSeedSameBytes) {
  PipelineConfig a = toy_config(dir_);
  PipelineConfig b = a;
  b.output_dir = (dir_ / "out2").string();
  run_pipeline(a);
  run_pipeline(b);
  EXPECT_EQ(testing::tree_contents(a.output_dir), testing::tree_contents(b.output_dir));
}

TEST(PipelineConfigParse, KeysCommentsAndErrors) {
  std::istringstream in(
      "# toy\n"
      "rpl_corpus = a.txt\n"
      "lrl_corpus=b.txt\n"
      "lex_lrl_to_rpl = x.tsv, y.tsv\n"
      "lex_rpl_to_lrl = z.tsv\n"
      "lrl_script = gurmukhi\n"
      "strategy = root_weighted\n"
      "seed = 99\n"
      "output_dir = out\n");
  const auto c = config_from_map(parse_config(in));
  EXPECT_EQ(c.lex_lrl_to_rpl, (std::vector<std::string>{"x.tsv", "y.tsv"}));
  EXPECT_EQ(c.lrl_script, Script::kGurmukhi);
  EXPECT_EQ(c.strategy, LookupStrategy::kRootWeighted);
  EXPECT_EQ(c.seed, 99u);

  ConfigMap bad = {{"bogus", "1"}};
  try {
    config_from_map(bad);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), Stage::kConfig);
  }
  std::istringstream no_eq("rpl_corpus a\n");
  EXPECT_THROW(parse_config(no_eq), LoadError);
  ConfigMap zero = {{"rpl_corpus", "a"}, {"lrl_corpus", "b"},
                    {"lex_lrl_to_rpl", "x"}, {"lex_rpl_to_lrl", "y"},
                    {"output_dir", "o"}, {"lrl_vocab_size", "0"}};
  EXPECT_THROW(config_from_map(zero), StageError);
}

}  // namespace
}  // namespace lrlprep
