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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlp/boosting.hpp"
#include "hyperlp/evaluation.hpp"
#include "hyperlp/features.hpp"
#include "hyperlp/info_theory.hpp"
#include "hyperlp/split.hpp"

namespace hyperlp {

/// Everything a pipeline run depends on. Loaded from a `key = value` file;
/// command-line flags override individual keys.
struct PipelineConfig {
  // Dataset: either a prefix (`<prefix>-nverts.txt`, ...) or explicit paths.
  std::string dataset;
  std::string nverts;
  std::string simplices;
  std::string times;
  std::filesystem::path output_dir = "out";

  SplitSpec split;
  BinningSpec binning;
  ClassifierConfig classifier;
  double classification_ratio = 0.75;

  CombinationMode predict_mode = CombinationMode::kMacro;
  // Optional restrictions for predict: a representation name (standalone) or
  // a combination tag (micro/macro), and a base predictor name.
  std::string combo;
  std::string base;

  /// Sets one key from its textual value. Throws UsageError on an unknown
  /// key or a malformed value; the message lists valid values.
  void set(std::string_view key, std::string_view value);

  /// Canonical `key = value` rendering of every key, in a fixed order.
  std::string to_text() const;

  /// Combinations selected by predict_mode, combo and base, in canonical
  /// order. Throws UsageError on unknown names.
  std::vector<ComboSpec> selected_combinations() const;

  /// Resolves the dataset file paths; throws UsageError when neither a
  /// prefix nor explicit paths are configured.
  struct DatasetFiles {
    std::filesystem::path nverts;
    std::filesystem::path simplices;
    std::optional<std::filesystem::path> times;
  };
  DatasetFiles dataset_files() const;

  std::filesystem::path split_dir() const { return output_dir / "split"; }
  std::filesystem::path features_path() const { return output_dir / "features.csv"; }
  std::filesystem::path mi_path() const { return output_dir / "mi.csv"; }
  std::filesystem::path predict_path(CombinationMode mode) const;
  std::filesystem::path rank_path(CombinationMode mode) const;
};

/// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
PipelineConfig parse_config(std::string_view text);
PipelineConfig load_config(const std::filesystem::path& path);

/// Each command reads only the persisted outputs of earlier stages, writes
/// its own outputs under output_dir, and echoes the effective configuration
/// to `<output_dir>/config.<command>.ini`.
void cmd_split(const PipelineConfig& cfg);
void cmd_features(const PipelineConfig& cfg);
void cmd_mi(const PipelineConfig& cfg);
/// Evaluates every combination of cfg.predict_mode, optionally restricted by
/// cfg.base and cfg.combo. Returns the rows written.
std::vector<EvalResult> cmd_predict(const PipelineConfig& cfg);
/// Aggregates the predict reports present in output_dir into rank summaries.
void cmd_report(const PipelineConfig& cfg);

/// Evaluation rows as `mode,combo,base,auc,n_pos,n_neg,seed`.
void write_eval_csv(std::ostream& out, std::span<const EvalResult> results);
std::vector<EvalResult> read_eval_csv(std::istream& in);
void write_rank_csv(std::ostream& out, const RankSummary& summary);
void write_mi_csv(std::ostream& out, std::span<const FeatureInformation> report);

}  // namespace hyperlp
