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

#include "hyperlp/info_theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "hyperlp/error.hpp"

namespace hyperlp {

void BinningSpec::validate() const {
  if (n_bins < 2) throw InvalidInput("number of bins must be >= 2");
}

namespace {

// Equal-width bins on log10 over [lo, hi] of the given magnitudes.
class LogBins {
 public:
  LogBins(double min_mag, double max_mag, std::size_t n_bins)
      : lo_(std::log10(min_mag)), n_bins_(n_bins) {
    const double hi = std::log10(max_mag);
    width_ = (hi - lo_) / static_cast<double>(n_bins);
  }

  BinId operator()(double magnitude) const {
    if (!(width_ > 0.0)) return 0;
    const double pos = (std::log10(magnitude) - lo_) / width_;
    if (pos <= 0.0) return 0;
    const auto idx = static_cast<std::size_t>(std::floor(pos));
    return static_cast<BinId>(std::min(idx, n_bins_ - 1));
  }

 private:
  double lo_;
  double width_ = 0.0;
  std::size_t n_bins_;
};

}  // namespace

std::vector<BinId> log_bin(std::span<const double> values, const BinningSpec& spec) {
  spec.validate();
  if (values.empty()) throw InvalidInput("cannot bin an empty sample");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double pos_min = inf, pos_max = 0.0, neg_min = inf, neg_max = 0.0;
  for (double x : values) {
    if (!std::isfinite(x)) throw InvalidInput("cannot bin a non-finite value");
    if (x > 0.0) {
      pos_min = std::min(pos_min, x);
      pos_max = std::max(pos_max, x);
    } else if (x < 0.0) {
      neg_min = std::min(neg_min, -x);
      neg_max = std::max(neg_max, -x);
    }
  }
  const auto n = spec.n_bins;
  const BinId zero_bin = static_cast<BinId>(n);
  const BinId neg_offset = static_cast<BinId>(n + 1);
  const LogBins positive(pos_max > 0.0 ? pos_min : 1.0, pos_max > 0.0 ? pos_max : 1.0, n);
  const LogBins negative(neg_max > 0.0 ? neg_min : 1.0, neg_max > 0.0 ? neg_max : 1.0, n);

  std::vector<BinId> bins(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = values[i];
    if (x > 0.0) {
      bins[i] = positive(x);
    } else if (x < 0.0) {
      bins[i] = neg_offset + negative(-x);
    } else {
      bins[i] = zero_bin;
    }
  }
  return bins;
}

double mutual_information(std::span<const BinId> bins, std::span<const int> labels) {
  if (bins.size() != labels.size()) {
    throw InvalidInput("bins and labels differ in length (" + std::to_string(bins.size()) +
                       " vs " + std::to_string(labels.size()) + ")");
  }
  if (bins.empty()) throw InvalidInput("mutual information needs at least one sample");

  std::unordered_map<BinId, std::array<std::size_t, 2>> joint;
  std::array<std::size_t, 2> label_counts{};
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const int y = labels[i];
    if (y != 0 && y != 1) throw InvalidInput("labels must be 0 or 1");
    ++joint[bins[i]][static_cast<std::size_t>(y)];
    ++label_counts[static_cast<std::size_t>(y)];
  }

  // Sum in bin order so the result does not depend on hash iteration order.
  std::vector<BinId> keys;
  keys.reserve(joint.size());
  for (const auto& [k, _] : joint) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  const double n = static_cast<double>(bins.size());
  double mi = 0.0;
  for (BinId k : keys) {
    const auto& counts = joint[k];
    const double nx = static_cast<double>(counts[0] + counts[1]);
    for (std::size_t y = 0; y < 2; ++y) {
      if (counts[y] == 0) continue;
      const double nxy = static_cast<double>(counts[y]);
      mi += (nxy / n) * std::log2(nxy * n / (nx * static_cast<double>(label_counts[y])));
    }
  }
  return std::max(mi, 0.0);
}

double entropy_bits(std::span<const BinId> values) {
  if (values.empty()) return 0.0;
  std::vector<BinId> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double h = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double p = static_cast<double>(j - i) / n;
    h -= p * std::log2(p);
    i = j;
  }
  return h;
}

std::vector<FeatureInformation> mi_report(const FeatureTable& table, const BinningSpec& spec) {
  if (table.rows() == 0) throw InvalidInput("feature table has no rows");
  const auto names = feature_names();
  std::vector<FeatureInformation> out;
  out.reserve(kNumFeatures);
  for (std::size_t c = 0; c < kNumFeatures; ++c) {
    const auto column = table.column(c);
    out.push_back({names[c], mutual_information(log_bin(column, spec), table.labels())});
  }
  return out;
}

}  // namespace hyperlp
