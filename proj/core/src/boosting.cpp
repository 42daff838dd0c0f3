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

#include "hyperlp/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hyperlp/error.hpp"

namespace hyperlp {

namespace {

constexpr double kMinGain = 1e-12;

double sigmoid(double m) { return 1.0 / (1.0 + std::exp(-m)); }

// log(1 + exp(m)) without overflow.
double softplus(double m) { return m > 0.0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m)); }

struct SplitCandidate {
  double gain = kMinGain;
  std::int32_t feature = -1;
  double threshold = 0.0;
};

struct ScanState {
  double grad_left = 0.0;
  double hess_left = 0.0;
  double last_value = 0.0;
  bool seen = false;
};

}  // namespace

void ClassifierConfig::validate() const {
  if (n_trees < 1) throw InvalidInput("n_trees must be >= 1");
  if (max_depth < 1) throw InvalidInput("max_depth must be >= 1");
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw InvalidInput("learning_rate must lie in (0, 1]");
  }
  if (!(subsample > 0.0 && subsample <= 1.0)) throw InvalidInput("subsample must lie in (0, 1]");
  if (!(lambda >= 0.0)) throw InvalidInput("lambda must be >= 0");
  if (!(min_child_weight >= 0.0)) throw InvalidInput("min_child_weight must be >= 0");
}

double logistic_loss(std::span<const double> margins, std::span<const int> labels) {
  if (margins.size() != labels.size()) throw InvalidInput("margins and labels differ in length");
  if (margins.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    sum += labels[i] == 1 ? softplus(-margins[i]) : softplus(margins[i]);
  }
  return sum / static_cast<double>(margins.size());
}

BoostedTrees BoostedTrees::train(std::span<const double> x, std::size_t n_features,
                                 std::span<const int> labels, const ClassifierConfig& cfg) {
  cfg.validate();
  const std::size_t n = labels.size();
  const std::size_t d = n_features;
  if (d == 0) throw InvalidInput("classifier needs at least one feature column");
  if (x.size() != n * d) {
    throw InvalidInput("feature matrix has " + std::to_string(x.size()) + " values, expected " +
                       std::to_string(n) + " x " + std::to_string(d));
  }
  std::size_t n_pos = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw InvalidInput("labels must be 0 or 1");
    n_pos += static_cast<std::size_t>(y);
  }
  if (n_pos == 0 || n_pos == n) throw InvalidInput("classifier needs both classes present");
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidInput("non-finite feature value");
  }

  BoostedTrees model;
  model.n_features_ = d;
  model.base_score_ = std::log(static_cast<double>(n_pos) / static_cast<double>(n - n_pos));

  // Rows presorted by each feature; ties keep row order.
  std::vector<std::vector<std::uint32_t>> sorted(d);
  for (std::size_t f = 0; f < d; ++f) {
    auto& idx = sorted[f];
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return x[a * d + f] < x[b * d + f]; });
  }

  std::vector<double> margin(n, model.base_score_);
  std::vector<double> grad(n), hess(n);
  std::vector<std::int32_t> node_of(n);
  std::vector<std::uint32_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0u);
  std::mt19937_64 rng(cfg.seed);
  const auto sample_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(cfg.subsample * static_cast<double>(n))));

  model.training_loss_.push_back(logistic_loss(margin, labels));
  model.trees_.reserve(cfg.n_trees);

  for (std::size_t t = 0; t < cfg.n_trees; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(margin[i]);
      grad[i] = p - labels[i];
      hess[i] = p * (1.0 - p);
    }
    std::fill(node_of.begin(), node_of.end(), -1);
    if (sample_size < n) {
      for (std::size_t i = 0; i < sample_size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(rows[i], rows[pick(rng)]);
      }
      for (std::size_t i = 0; i < sample_size; ++i) node_of[rows[i]] = 0;
    } else {
      std::fill(node_of.begin(), node_of.end(), 0);
    }

    Tree tree(1);
    std::vector<double> node_grad(1, 0.0), node_hess(1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (node_of[i] == 0) {
        node_grad[0] += grad[i];
        node_hess[0] += hess[i];
      }
    }
    std::vector<std::int32_t> active = {0};

    for (std::size_t depth = 0; depth < cfg.max_depth && !active.empty(); ++depth) {
      std::vector<char> is_active(tree.size(), 0);
      for (auto k : active) is_active[static_cast<std::size_t>(k)] = 1;
      std::vector<SplitCandidate> best(tree.size());
      std::vector<ScanState> scan(tree.size());

      for (std::size_t f = 0; f < d; ++f) {
        for (auto k : active) scan[static_cast<std::size_t>(k)] = ScanState{};
        for (std::uint32_t r : sorted[f]) {
          const std::int32_t k = node_of[r];
          if (k < 0 || !is_active[static_cast<std::size_t>(k)]) continue;
          const auto ku = static_cast<std::size_t>(k);
          auto& s = scan[ku];
          const double value = x[r * d + f];
          if (s.seen && value > s.last_value) {
            const double gr = node_grad[ku] - s.grad_left;
            const double hr = node_hess[ku] - s.hess_left;
            if (s.hess_left >= cfg.min_child_weight && hr >= cfg.min_child_weight) {
              const double gain = s.grad_left * s.grad_left / (s.hess_left + cfg.lambda) +
                                  gr * gr / (hr + cfg.lambda) -
                                  node_grad[ku] * node_grad[ku] / (node_hess[ku] + cfg.lambda);
              if (gain > best[ku].gain) {
                best[ku] = {gain, static_cast<std::int32_t>(f), s.last_value};
              }
            }
          }
          s.grad_left += grad[r];
          s.hess_left += hess[r];
          s.last_value = value;
          s.seen = true;
        }
      }

      std::vector<std::int32_t> next;
      for (auto k : active) {
        const auto ku = static_cast<std::size_t>(k);
        if (best[ku].feature < 0) continue;
        const auto left = static_cast<std::int32_t>(tree.size());
        tree.push_back(Node{});
        tree.push_back(Node{});
        node_grad.resize(tree.size(), 0.0);
        node_hess.resize(tree.size(), 0.0);
        tree[ku].feature = best[ku].feature;
        tree[ku].threshold = best[ku].threshold;
        tree[ku].left = left;
        tree[ku].right = left + 1;
        next.push_back(left);
        next.push_back(left + 1);
      }
      if (next.empty()) break;
      for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t k = node_of[i];
        if (k < 0 || tree[static_cast<std::size_t>(k)].is_leaf()) continue;
        const Node& node = tree[static_cast<std::size_t>(k)];
        const std::int32_t child =
            x[i * d + static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left
                                                                                : node.right;
        node_of[i] = child;
        node_grad[static_cast<std::size_t>(child)] += grad[i];
        node_hess[static_cast<std::size_t>(child)] += hess[i];
      }
      active = std::move(next);
    }

    for (std::size_t k = 0; k < tree.size(); ++k) {
      if (tree[k].is_leaf()) {
        tree[k].value = -node_grad[k] / (node_hess[k] + cfg.lambda) * cfg.learning_rate;
      }
    }
    model.trees_.push_back(std::move(tree));
    for (std::size_t i = 0; i < n; ++i) {
      const Tree& tr = model.trees_.back();
      std::size_t k = 0;
      while (!tr[k].is_leaf()) {
        k = static_cast<std::size_t>(x[i * d + static_cast<std::size_t>(tr[k].feature)] <=
                                             tr[k].threshold
                                         ? tr[k].left
                                         : tr[k].right);
      }
      margin[i] += tr[k].value;
    }
    model.training_loss_.push_back(logistic_loss(margin, labels));
  }
  return model;
}

double BoostedTrees::predict_row(std::span<const double> row) const {
  if (row.size() != n_features_) {
    throw InvalidInput("row has " + std::to_string(row.size()) + " features, model expects " +
                       std::to_string(n_features_));
  }
  double m = base_score_;
  for (const Tree& tree : trees_) {
    std::size_t k = 0;
    while (!tree[k].is_leaf()) {
      k = static_cast<std::size_t>(row[static_cast<std::size_t>(tree[k].feature)] <= tree[k].threshold
                                       ? tree[k].left
                                       : tree[k].right);
    }
    m += tree[k].value;
  }
  return m;
}

std::vector<double> BoostedTrees::predict(std::span<const double> x) const {
  if (n_features_ == 0 || x.size() % n_features_ != 0) {
    throw InvalidInput("input size " + std::to_string(x.size()) + " is not a multiple of " +
                       std::to_string(n_features_) + " features");
  }
  const std::size_t n = x.size() / n_features_;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = predict_row(x.subspan(i * n_features_, n_features_));
  return out;
}

}  // namespace hyperlp
