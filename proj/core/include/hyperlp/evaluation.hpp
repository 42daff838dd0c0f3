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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/boosting.hpp"
#include "hyperlp/features.hpp"

namespace hyperlp {

struct RowPartition {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Stratified seeded split: each class contributes round(ratio * n_class)
/// rows to train (kept within [1, n_class - 1]). Indices are ascending.
/// Throws InvalidInput unless 0 < ratio < 1 and each class has >= 2 rows.
RowPartition classification_split(std::span<const int> labels, double ratio, std::uint64_t seed);

/// Mann-Whitney AUC with average ranks for ties. Throws InvalidInput when a
/// class is missing or lengths differ.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

struct EvalResult {
  ComboSpec combo;
  double auc = 0.0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::uint64_t seed = 0;
};

/// AUC of one raw score column over the whole table.
EvalResult standalone_auc(const FeatureTable& table, BasePredictor base, Representation repr);

/// Trains a classifier on the combination's columns for the train part of a
/// stratified split and reports the AUC on the held-out part.
EvalResult evaluate_combination(const FeatureTable& table, const ComboSpec& spec,
                                const ClassifierConfig& cfg, double train_ratio,
                                std::uint64_t split_seed);

struct RankEntry {
  std::string alternative;
  double mean_rank = 0.0;
  double rank_variance = 0.0;
};
using RankSummary = std::vector<RankEntry>;

/// For every group (base predictor), ranks the alternatives by descending
/// AUC with average ranks on ties, then reports each alternative's mean and
/// population variance of rank across groups. `auc_by_group[g][alt]` must
/// exist for every group and alternative; throws InvalidInput otherwise.
RankSummary rank_performance(std::span<const std::string> alternatives,
                             const std::map<std::string, std::map<std::string, double>>& auc_by_group);

}  // namespace hyperlp
