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
#include <span>
#include <vector>

namespace hyperlp {

struct ClassifierConfig {
  std::size_t n_trees = 100;
  std::size_t max_depth = 3;
  double learning_rate = 0.1;
  double subsample = 1.0;
  /// L2 penalty on leaf values.
  double lambda = 1.0;
  /// Minimum hessian mass in each child of a split.
  double min_child_weight = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Gradient-boosted regression trees on the logistic loss, fit with
/// second-order (Newton) leaf values and exact greedy splits.
class BoostedTrees {
 public:
  struct Node {
    // Internal node: rows with x[feature] <= threshold go left.
    std::int32_t feature = -1;
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double value = 0.0;  // leaf output, already shrunk by the learning rate

    bool is_leaf() const { return feature < 0; }
  };
  using Tree = std::vector<Node>;

  /// `x` is row-major with `n_features` columns; labels are 0 or 1.
  /// Throws InvalidInput on shape mismatch, non-finite features, or when one
  /// class is missing.
  static BoostedTrees train(std::span<const double> x, std::size_t n_features,
                            std::span<const int> labels, const ClassifierConfig& cfg);

  /// Raw margin (log-odds) per row. Throws InvalidInput if the row-major
  /// input is not a multiple of n_features().
  std::vector<double> predict(std::span<const double> x) const;
  double predict_row(std::span<const double> row) const;

  std::size_t n_features() const { return n_features_; }
  double base_score() const { return base_score_; }
  const std::vector<Tree>& trees() const { return trees_; }
  /// Mean logistic loss on the training rows after each boosting round,
  /// preceded by the loss of the constant base score.
  const std::vector<double>& training_loss() const { return training_loss_; }

 private:
  std::size_t n_features_ = 0;
  double base_score_ = 0.0;
  std::vector<Tree> trees_;
  std::vector<double> training_loss_;
};

/// Mean logistic loss of raw margins.
double logistic_loss(std::span<const double> margins, std::span<const int> labels);

}  // namespace hyperlp
