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

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlp/similarity.hpp"
#include "hyperlp/split.hpp"

namespace hyperlp {

/// Graph (G), weighted graph (W) and the four hypergraph norms.
enum class Representation { kG, kW, kHm, kHa, kH1, kH2 };
inline constexpr std::size_t kNumRepresentations = 6;
inline constexpr std::size_t kNumFeatures = kNumPredictors * kNumRepresentations;
inline constexpr std::array<Representation, kNumRepresentations> kAllRepresentations = {
    Representation::kG,  Representation::kW,  Representation::kHm,
    Representation::kHa, Representation::kH1, Representation::kH2};

/// Display name: "G", "W", "Hm", "Ha", "H1", "H2".
std::string_view to_string(Representation r);
Representation parse_representation(std::string_view name);

/// Column index of (pred, repr): predictors major, representations minor.
constexpr std::size_t feature_index(BasePredictor pred, Representation repr) {
  return static_cast<std::size_t>(pred) * kNumRepresentations + static_cast<std::size_t>(repr);
}
/// Lowercase `<pred>_<repr>`, e.g. "cn_h1".
std::string feature_name(BasePredictor pred, Representation repr);
/// Inverse of feature_name(); throws InvalidInput.
std::pair<BasePredictor, Representation> parse_feature_name(std::string_view name);
std::vector<std::string> feature_names();

/// Per node pair: label and the 60 scores in canonical column order.
class FeatureTable {
 public:
  FeatureTable() = default;

  void add_row(Edge pair, int label, std::span<const double> scores);

  std::size_t rows() const { return pairs_.size(); }
  std::span<const Edge> pairs() const { return pairs_; }
  std::span<const int> labels() const { return labels_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(scores_).subspan(i * kNumFeatures, kNumFeatures);
  }
  double at(std::size_t i, std::size_t column) const { return scores_[i * kNumFeatures + column]; }
  std::vector<double> column(std::size_t column) const;
  std::size_t count_label(int label) const;

  /// CSV with header `u,v,label,<60 columns>`; values use 17 significant
  /// digits so they round-trip exactly.
  void write_csv(std::ostream& out) const;
  void save_csv(const std::filesystem::path& path) const;
  static FeatureTable read_csv(std::istream& in);
  static FeatureTable load_csv(const std::filesystem::path& path);

 private:
  std::vector<Edge> pairs_;
  std::vector<int> labels_;
  std::vector<double> scores_;
};

/// Computes all 60 scores for every pair in E_te (label 1) followed by
/// Ê_te (label 0), using the train hypergraph and its expansions.
FeatureTable compute_features(const PreparedDataset& prepared);

enum class CombinationMode { kStandalone, kMicro, kMacro };
enum class ComboTag { kG, kW, kH, kGH, kWH };
inline constexpr std::array<ComboTag, 5> kAllComboTags = {ComboTag::kG, ComboTag::kW, ComboTag::kH,
                                                          ComboTag::kGH, ComboTag::kWH};

std::string_view to_string(CombinationMode m);
CombinationMode parse_combination_mode(std::string_view name);
std::string_view to_string(ComboTag t);
ComboTag parse_combo_tag(std::string_view name);
/// Representations a tag expands to; H = {Hm, Ha, H1, H2}.
std::vector<Representation> expand(ComboTag tag);

/// Which columns of the feature table a predictor uses.
struct ComboSpec {
  CombinationMode mode = CombinationMode::kStandalone;
  ComboTag tag = ComboTag::kG;                     // micro and macro
  Representation representation = Representation::kG;  // standalone
  std::optional<BasePredictor> base;               // standalone and micro

  static ComboSpec standalone(BasePredictor base, Representation repr);
  static ComboSpec micro(BasePredictor base, ComboTag tag);
  static ComboSpec macro(ComboTag tag);

  /// "std-H1", "mic-GH", "mac-WH".
  std::string label() const;
  /// Column indices into the feature table; throws InvalidInput when a
  /// standalone or micro spec has no base predictor.
  std::vector<std::size_t> columns() const;
};

/// Dense row-major design matrix with labels.
struct DesignMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<int> labels;
  std::vector<std::string> column_names;

  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// Projects the feature table onto the columns of `spec`.
DesignMatrix select_combination(const FeatureTable& table, const ComboSpec& spec);

struct CombinationCounts {
  std::size_t standalone = 0;
  std::size_t micro = 0;
  std::size_t macro = 0;
};
/// Number of distinct standalone, micro and macro combinations.
CombinationCounts count_combinations();

/// Every combination of a mode in canonical order (predictor major).
std::vector<ComboSpec> all_combinations(CombinationMode mode);

}  // namespace hyperlp
