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
#include <string>
#include <vector>

#include "hyperlp/features.hpp"

namespace hyperlp {

struct BinningSpec {
  std::size_t n_bins = 2000;

  void validate() const;  // n_bins >= 2
};

using BinId = std::uint32_t;

/// Log10 binning. Positive values fall into n_bins equal-width bins on
/// [log10(min+), log10(max+)], with the upper boundary of each bin belonging
/// to the next bin and the maximum clamped into the last. Exact zeros share
/// a dedicated bin (id n_bins). Negative values are binned the same way on
/// their magnitudes into ids n_bins + 1 + k.
///
/// Throws InvalidInput on empty or non-finite input.
std::vector<BinId> log_bin(std::span<const double> values, const BinningSpec& spec);

/// Plug-in mutual information in bits between bin ids and {0, 1} labels.
double mutual_information(std::span<const BinId> bins, std::span<const int> labels);

/// Shannon entropy in bits of a discrete sample.
double entropy_bits(std::span<const BinId> values);

struct FeatureInformation {
  std::string feature;
  double mi_bits = 0.0;
};

/// MI of every score column against the label, in canonical column order.
std::vector<FeatureInformation> mi_report(const FeatureTable& table, const BinningSpec& spec);

}  // namespace hyperlp
