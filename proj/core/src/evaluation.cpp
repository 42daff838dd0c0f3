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

#include "hyperlp/evaluation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hyperlp/error.hpp"

namespace hyperlp {

RowPartition classification_split(std::span<const int> labels, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidInput("train ratio must lie in (0, 1)");
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw InvalidInput("labels must be 0 or 1");
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[static_cast<std::size_t>(c)].size() < 2) {
      throw InvalidInput("class " + std::to_string(c) + " has " +
                         std::to_string(by_class[static_cast<std::size_t>(c)].size()) +
                         " rows; stratified split needs at least 2");
    }
  }

  std::mt19937_64 rng(seed);
  RowPartition out;
  for (auto& rows : by_class) {
    const std::size_t n = rows.size();
    auto take = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
    take = std::clamp<std::size_t>(take, 1, n - 1);
    for (std::size_t i = 0; i < take; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(rows[i], rows[pick(rng)]);
    }
    out.train.insert(out.train.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(take));
    out.test.insert(out.test.end(), rows.begin() + static_cast<std::ptrdiff_t>(take), rows.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw InvalidInput("scores and labels differ in length");
  std::size_t n_pos = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw InvalidInput("labels must be 0 or 1");
    n_pos += static_cast<std::size_t>(y);
  }
  const std::size_t n = labels.size();
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) throw InvalidInput("AUC needs both positive and negative rows");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of positive ranks, tied groups sharing their average rank.
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::size_t pos_in_group = 0;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      pos_in_group += static_cast<std::size_t>(labels[order[j]]);
      ++j;
    }
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    rank_sum += avg_rank * static_cast<double>(pos_in_group);
    i = j;
  }
  const double np = static_cast<double>(n_pos);
  return (rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

EvalResult standalone_auc(const FeatureTable& table, BasePredictor base, Representation repr) {
  EvalResult r;
  r.combo = ComboSpec::standalone(base, repr);
  r.auc = roc_auc(table.column(feature_index(base, repr)), table.labels());
  r.n_pos = table.count_label(1);
  r.n_neg = table.count_label(0);
  return r;
}

EvalResult evaluate_combination(const FeatureTable& table, const ComboSpec& spec,
                                const ClassifierConfig& cfg, double train_ratio,
                                std::uint64_t split_seed) {
  if (spec.mode == CombinationMode::kStandalone) {
    return standalone_auc(table, *spec.base, spec.representation);
  }
  const DesignMatrix m = select_combination(table, spec);
  const RowPartition part = classification_split(m.labels, train_ratio, split_seed);

  auto gather = [&](const std::vector<std::size_t>& idx, std::vector<double>& xs,
                    std::vector<int>& ys) {
    xs.reserve(idx.size() * m.cols);
    for (std::size_t i : idx) {
      for (std::size_t c = 0; c < m.cols; ++c) xs.push_back(m(i, c));
      ys.push_back(m.labels[i]);
    }
  };
  std::vector<double> x_train, x_test;
  std::vector<int> y_train, y_test;
  gather(part.train, x_train, y_train);
  gather(part.test, x_test, y_test);

  const BoostedTrees model = BoostedTrees::train(x_train, m.cols, y_train, cfg);
  EvalResult r;
  r.combo = spec;
  r.auc = roc_auc(model.predict(x_test), y_test);
  r.n_pos = static_cast<std::size_t>(std::count(y_test.begin(), y_test.end(), 1));
  r.n_neg = y_test.size() - r.n_pos;
  r.seed = split_seed;
  return r;
}

RankSummary rank_performance(std::span<const std::string> alternatives,
                             const std::map<std::string, std::map<std::string, double>>& auc_by_group) {
  if (alternatives.empty()) throw InvalidInput("no alternatives to rank");
  if (auc_by_group.empty()) throw InvalidInput("no groups to rank over");
  const std::size_t k = alternatives.size();
  std::vector<std::vector<double>> ranks(k);

  for (const auto& [group, aucs] : auc_by_group) {
    std::vector<double> values(k);
    for (std::size_t a = 0; a < k; ++a) {
      auto it = aucs.find(alternatives[a]);
      if (it == aucs.end()) {
        throw InvalidInput("missing AUC for alternative '" + alternatives[a] + "' in group '" +
                           group + "'");
      }
      values[a] = it->second;
    }
    // Rank 1 = highest AUC; ties share the average of their positions.
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t better = 0, equal = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (values[b] > values[a]) ++better;
        else if (values[b] == values[a]) ++equal;
      }
      ranks[a].push_back(static_cast<double>(better) + (static_cast<double>(equal) + 1.0) / 2.0);
    }
  }

  RankSummary out;
  for (std::size_t a = 0; a < k; ++a) {
    const double g = static_cast<double>(ranks[a].size());
    double mean = 0.0;
    for (double r : ranks[a]) mean += r;
    mean /= g;
    double var = 0.0;
    for (double r : ranks[a]) var += (r - mean) * (r - mean);
    out.push_back({alternatives[a], mean, var / g});
  }
  return out;
}

}  // namespace hyperlp
