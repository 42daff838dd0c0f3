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

#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlp/error.hpp"
#include "hyperlp/pipeline.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> mode;
  std::optional<std::string> combo;
  std::optional<std::string> base;
  std::optional<std::string> seed;
  std::optional<std::string> dataset;
  std::optional<std::string> output_dir;
  std::optional<std::string> bins;
  std::vector<std::string> sets;
};

void add_common(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config, "key = value configuration file");
  cmd.add_option("--dataset", o.dataset, "Benson dataset prefix (<prefix>-nverts.txt, ...)");
  cmd.add_option("--output-dir", o.output_dir, "directory for all artifacts");
  cmd.add_option("--set", o.sets, "override any config key: --set key=value")->take_all();
}

hyperlp::PipelineConfig resolve(const std::string& command, const Overrides& o) {
  hyperlp::PipelineConfig cfg = o.config.empty() ? hyperlp::PipelineConfig{}
                                                 : hyperlp::load_config(o.config);
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw hyperlp::UsageError("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.dataset) cfg.set("dataset", *o.dataset);
  if (o.output_dir) cfg.set("output_dir", *o.output_dir);
  if (o.bins) cfg.set("bins", *o.bins);
  if (o.combo) cfg.set("combo", *o.combo);
  if (o.base) cfg.set("base", *o.base);
  if (o.mode) cfg.set(command == "split" ? "split_mode" : "predict_mode", *o.mode);
  if (o.seed) cfg.set(command == "split" ? "seed" : "classifier_seed", *o.seed);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph link prediction pipeline"};
  app.require_subcommand(1);
  Overrides o;

  auto* split = app.add_subcommand("split", "split a dataset into train and test parts");
  add_common(*split, o);
  split->add_option("--mode", o.mode, "temporal or structural");
  split->add_option("--seed", o.seed, "split and negative-sampling seed");

  auto* features = app.add_subcommand("features", "score every test pair with the 60 features");
  add_common(*features, o);

  auto* mi = app.add_subcommand("mi", "mutual information of each feature with the label");
  add_common(*mi, o);
  mi->add_option("--bins", o.bins, "number of log bins");

  auto* predict = app.add_subcommand("predict", "train classifiers and report test AUC");
  add_common(*predict, o);
  predict->add_option("--mode", o.mode, "standalone, micro or macro");
  predict->add_option("--combo", o.combo, "representation (standalone) or tag (micro/macro)");
  predict->add_option("--base", o.base, "base predictor, e.g. AA");
  predict->add_option("--seed", o.seed, "classifier and classification-split seed");

  auto* report = app.add_subcommand("report", "rank summaries over the predict reports");
  add_common(*report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const hyperlp::PipelineConfig cfg = resolve(command, o);
    if (command == "split") hyperlp::cmd_split(cfg);
    else if (command == "features") hyperlp::cmd_features(cfg);
    else if (command == "mi") hyperlp::cmd_mi(cfg);
    else if (command == "predict") hyperlp::cmd_predict(cfg);
    else hyperlp::cmd_report(cfg);
  } catch (const hyperlp::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
