// Copyright 2026 The hyperlp Authors.
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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hyperlp/error.hpp"
#include "hyperlp/log.hpp"
#include "hyperlp/pipeline.hpp"
#include "support/fixtures.hpp"

namespace hyperlp {
namespace {

using namespace hyperlp::testing;
namespace fs = std::filesystem;

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class QuietWarnings : public ::testing::Test {
 protected:
  void SetUp() override { previous_ = set_warning_sink([](std::string_view) {}); }
  void TearDown() override { set_warning_sink(previous_); }

 private:
  WarningSink previous_;
};

PipelineConfig planted_config(const std::string& name) {
  const fs::path dir = scratch_dir(name);
  PlantedSpec spec;
  spec.n_vertices = 80;
  spec.n_hyperedges = 300;
  const fs::path prefix = write_benson(planted_hypergraph(spec, 1), dir / "data", "planted");
  PipelineConfig cfg;
  cfg.dataset = prefix.string();
  cfg.output_dir = dir / "out";
  cfg.split.seed = 7;
  cfg.classifier.n_trees = 20;
  return cfg;
}

TEST(Config, ParsesKeysAndComments) {
  const PipelineConfig cfg = parse_config(
      "# comment\n"
      "dataset = data/toy\n"
      "\n"
      "split_mode = temporal   # trailing\n"
      "rho=0.3\n"
      "p = 2\n"
      "bins = 1000\n"
      "n_trees = 50\n"
      "predict_mode = micro\n");
  EXPECT_EQ(cfg.dataset, "data/toy");
  EXPECT_EQ(cfg.split.mode, SplitMode::kTemporal);
  EXPECT_DOUBLE_EQ(cfg.split.rho, 0.3);
  EXPECT_EQ(cfg.split.p, 2u);
  EXPECT_EQ(cfg.binning.n_bins, 1000u);
  EXPECT_EQ(cfg.classifier.n_trees, 50u);
  EXPECT_EQ(cfg.predict_mode, CombinationMode::kMicro);
}

TEST(Config, RejectsUnknownKeysAndValues) {
  EXPECT_THROW(parse_config("colour = blue\n"), UsageError);
  EXPECT_THROW(parse_config("rho = lots\n"), UsageError);
  EXPECT_THROW(parse_config("split_mode = sideways\n"), UsageError);
  EXPECT_THROW(parse_config("just words\n"), UsageError);
  try {
    parse_config("colour = blue\n");
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("classifier_seed"), std::string::npos);
  }
}

TEST(Config, TextRoundTrip) {
  PipelineConfig cfg;
  cfg.set("rho", "0.25");
  cfg.set("seed", "99");
  cfg.set("base", "AA");
  cfg.set("learning_rate", "0.05");
  const std::string text = cfg.to_text();
  EXPECT_EQ(parse_config(text).to_text(), text);
}

TEST(Config, SelectedCombinations) {
  PipelineConfig cfg;
  EXPECT_EQ(cfg.selected_combinations().size(), 5u);
  cfg.set("predict_mode", "micro");
  cfg.set("base", "AA");
  EXPECT_EQ(cfg.selected_combinations().size(), 5u);
  cfg.set("combo", "GH");
  ASSERT_EQ(cfg.selected_combinations().size(), 1u);
  EXPECT_EQ(cfg.selected_combinations()[0].label(), "mic-GH");
  cfg.set("predict_mode", "standalone");
  cfg.set("combo", "H1");
  EXPECT_EQ(cfg.selected_combinations().size(), 1u);
  cfg.set("combo", "");
  cfg.set("base", "");
  EXPECT_EQ(cfg.selected_combinations().size(), 60u);
  cfg.set("base", "Katz");
  EXPECT_THROW(cfg.selected_combinations(), UsageError);
  cfg.set("base", "AA");
  cfg.set("predict_mode", "macro");
  EXPECT_THROW(cfg.selected_combinations(), UsageError);
}

TEST(Config, DatasetFiles) {
  PipelineConfig cfg;
  EXPECT_THROW(cfg.dataset_files(), UsageError);
  cfg.dataset = "x/toy";
  EXPECT_EQ(cfg.dataset_files().simplices, fs::path("x/toy-simplices.txt"));
}

TEST_F(QuietWarnings, SplitToyIsDeterministic) {
  const fs::path dir = scratch_dir("pipeline_split_toy");
  PipelineConfig cfg;
  cfg.dataset = write_benson(toy_hypergraph(), dir, "toy").string();
  cfg.output_dir = dir / "out";
  cfg.split.seed = 7;
  cmd_split(cfg);
  const std::vector<std::string> files = {"train_hyperedges.txt", "train_edges.txt",
                                          "test_links.txt", "test_nonlinks.txt",
                                          "split_meta.json"};
  std::vector<std::string> first;
  for (const auto& f : files) {
    ASSERT_TRUE(fs::exists(cfg.split_dir() / f)) << f;
    first.push_back(read_file(cfg.split_dir() / f));
  }
  EXPECT_TRUE(fs::exists(cfg.output_dir / "config.split.ini"));
  cmd_split(cfg);
  for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(read_file(cfg.split_dir() / files[i]), first[i]);
}

TEST(Pipeline, TemporalWithoutTimesIsUsageError) {
  const fs::path dir = scratch_dir("pipeline_temporal_untimed");
  PipelineConfig cfg;
  cfg.dataset = write_benson(toy_hypergraph(), dir, "toy").string();
  cfg.output_dir = dir / "out";
  cfg.split.mode = SplitMode::kTemporal;
  EXPECT_THROW(cmd_split(cfg), UsageError);
}

TEST(Pipeline, FeaturesNeedSplitAndTestLinks) {
  const fs::path dir = scratch_dir("pipeline_features_errors");
  PipelineConfig cfg;
  cfg.output_dir = dir / "out";
  EXPECT_THROW(cmd_features(cfg), std::exception);

  PreparedDataset empty;
  empty.train_hypergraph = toy_hypergraph();
  save_prepared(empty, cfg.split_dir(), {});
  EXPECT_THROW(cmd_features(cfg), DataError);
}

TEST_F(QuietWarnings, FullPipelineOnPlantedData) {
  PipelineConfig cfg = planted_config("pipeline_full");
  cmd_split(cfg);
  cmd_features(cfg);
  const std::string features = read_file(cfg.features_path());
  const std::string header = features.substr(0, features.find('\n'));
  EXPECT_EQ(std::count(header.begin(), header.end(), ',') + 1, 63);
  cmd_features(cfg);
  EXPECT_EQ(read_file(cfg.features_path()), features);

  cmd_mi(cfg);
  const std::string mi = read_file(cfg.mi_path());
  EXPECT_EQ(count_lines(mi), 61u);
  EXPECT_EQ(mi.substr(0, 20), "feature,mi_bits\naa_g");

  const auto macro = cmd_predict(cfg);
  EXPECT_EQ(macro.size(), 5u);
  const std::string macro_csv = read_file(cfg.predict_path(CombinationMode::kMacro));
  EXPECT_EQ(count_lines(macro_csv), 6u);
  cmd_predict(cfg);
  EXPECT_EQ(read_file(cfg.predict_path(CombinationMode::kMacro)), macro_csv);

  cfg.set("predict_mode", "micro");
  cfg.set("base", "AA");
  EXPECT_EQ(cmd_predict(cfg).size(), 5u);
  cfg.set("predict_mode", "standalone");
  cfg.set("base", "");
  EXPECT_EQ(cmd_predict(cfg).size(), 60u);

  cmd_report(cfg);
  const std::string ranks = read_file(cfg.rank_path(CombinationMode::kStandalone));
  EXPECT_EQ(ranks.substr(0, ranks.find('\n')), "alternative,mean_rank,rank_variance");
  EXPECT_EQ(count_lines(ranks), 7u);
  EXPECT_EQ(count_lines(read_file(cfg.rank_path(CombinationMode::kMicro))), 6u);
  EXPECT_EQ(count_lines(read_file(cfg.rank_path(CombinationMode::kMacro))), 6u);

  cfg.set("predict_mode", "micro");
  cfg.set("combo", "GH");
  cmd_predict(cfg);
  cmd_report(cfg);
  EXPECT_EQ(count_lines(read_file(cfg.rank_path(CombinationMode::kMicro))), 2u);
  for (const char* c : {"split", "features", "mi", "predict", "report"}) {
    EXPECT_TRUE(fs::exists(cfg.output_dir / (std::string("config.") + c + ".ini"))) << c;
  }
}

TEST(Pipeline, ReportWithoutPredictionsFails) {
  PipelineConfig cfg;
  cfg.output_dir = scratch_dir("pipeline_report_empty");
  EXPECT_THROW(cmd_report(cfg), DataError);
}

TEST(EvalCsv, RoundTrip) {
  std::vector<EvalResult> rows(2);
  rows[0].combo = ComboSpec::micro(BasePredictor::kAA, ComboTag::kGH);
  rows[0].auc = 0.8125;
  rows[0].n_pos = 10;
  rows[0].n_neg = 50;
  rows[0].seed = 3;
  rows[1].combo = ComboSpec::macro(ComboTag::kW);
  rows[1].auc = 1.0 / 3.0;
  std::stringstream buf;
  write_eval_csv(buf, rows);
  const auto back = read_eval_csv(buf);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].combo.label(), "mic-GH");
  EXPECT_EQ(back[0].combo.base, BasePredictor::kAA);
  EXPECT_EQ(back[0].auc, 0.8125);
  EXPECT_EQ(back[1].auc, 1.0 / 3.0);
  EXPECT_FALSE(back[1].combo.base.has_value());
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERLP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch_dir("pipeline_cli");
  const std::string prefix = write_benson(toy_hypergraph(), dir, "toy").string();
  const std::string out = (dir / "out").string();
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("bogus"), 1);
  EXPECT_EQ(run_cli("split --dataset " + prefix + " --output-dir " + out + " --mode temporal"), 1);
  EXPECT_EQ(run_cli("split --dataset " + prefix + " --output-dir " + out + " --set colour=blue"), 1);
  EXPECT_EQ(run_cli("features --output-dir " + out), 2);
  EXPECT_EQ(run_cli("split --dataset " + prefix + " --output-dir " + out + " --seed 7"), 0);
  EXPECT_EQ(run_cli("features --output-dir " + out), 0);
  EXPECT_EQ(run_cli("predict --output-dir " + out + " --mode micro --base Katz"), 1);
  EXPECT_EQ(run_cli("split --config " + (dir / "missing.ini").string()), 1);

  std::ofstream(dir / "run.ini") << "dataset = " << prefix << "\noutput_dir = " << out << "\n";
  EXPECT_EQ(run_cli("split --config " + (dir / "run.ini").string() + " --set rho=0.5"), 0);
  const std::string echoed = read_file(dir / "out" / "config.split.ini");
  EXPECT_NE(echoed.find("rho = 0.5"), std::string::npos);
}

}  // namespace
}  // namespace hyperlp
