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
#include <span>
#include <string_view>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

/// The ten base predictors, in canonical order.
enum class BasePredictor { kAA, kAS, kCN, kCos, kPA, kJC, kMxO, kMnO, kNM, kPrn };
inline constexpr std::size_t kNumPredictors = 10;
inline constexpr std::array<BasePredictor, kNumPredictors> kAllPredictors = {
    BasePredictor::kAA,  BasePredictor::kAS,  BasePredictor::kCN,  BasePredictor::kCos,
    BasePredictor::kPA,  BasePredictor::kJC,  BasePredictor::kMxO, BasePredictor::kMnO,
    BasePredictor::kNM,  BasePredictor::kPrn};

/// Display name, e.g. "AA", "MxO".
std::string_view to_string(BasePredictor p);
/// Case-insensitive parse of a display name; throws InvalidInput.
BasePredictor parse_predictor(std::string_view name);

enum class NormKind { kMax, kAvg, kL1, kL2 };
inline constexpr std::size_t kNumNorms = 4;
inline constexpr std::array<NormKind, kNumNorms> kAllNorms = {NormKind::kMax, NormKind::kAvg,
                                                              NormKind::kL1, NormKind::kL2};
std::string_view to_string(NormKind n);

/// Side information some predictors need: per-element degrees (AA) and the
/// universe size (Prn).
struct SimilarityContext {
  std::span<const double> degree_of;
  std::size_t universe_size = 1;
};

/// Sufficient statistics of a pair of (possibly weighted) sets. Every base
/// predictor is a function of these.
struct SetOverlap {
  double intersection = 0.0;  // |X ∩ Y|, or the weighted common mass
  double size_x = 0.0;        // |X| or strength
  double size_y = 0.0;
  double union_size = 0.0;    // |X ∪ Y|
  double adamic_adar = 0.0;   // Σ_{z ∈ X∩Y} 1/ln deg(z), deg(z) > 1
};

/// Evaluates a predictor from overlap statistics. Zero denominators give 0.
double score_from_overlap(BasePredictor pred, const SetOverlap& o, std::size_t universe_size);

/// φ_pred({X, Y}) for sorted, duplicate-free vertex sets.
double set_similarity(BasePredictor pred, std::span<const VertexId> x,
                      std::span<const VertexId> y, const SimilarityContext& ctx);

/// Overlap statistics of two sorted vertex sets.
SetOverlap overlap(std::span<const VertexId> x, std::span<const VertexId> y,
                   std::span<const double> degree_of);

/// α(φ)({u, v}) = φ({Γ(u), Γ(v)}) on the graph's neighborhoods, with graph
/// degrees for AA and |V| as universe size.
double adjacency_score(BasePredictor pred, const Graph& g, VertexId u, VertexId v);

/// Weighted variant: set sizes become strengths, the intersection becomes
/// Σ_{z common} (w(u,z) + w(v,z)) / 2. Prn falls back to the unweighted score.
double weighted_adjacency_score(BasePredictor pred, const Graph& g, VertexId u, VertexId v);

/// Row-major real matrix.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> values() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Hyperdegrees |Γ̃(z)| of every vertex, as doubles for SimilarityContext.
std::vector<double> hyperdegrees(const Hypergraph& h);

/// η(φ)({u, v}): entry (i, j) is φ(f_i, f'_j) for the i-th hyperedge incident
/// on u and the j-th incident on v.
ScoreMatrix incidence_matrix(BasePredictor pred, const Hypergraph& h, VertexId u, VertexId v,
                             const SimilarityContext& ctx);

/// max / mean / Σ|x| / sqrt(Σx²) of the entries; 0 for an empty matrix.
double matrix_norm(const ScoreMatrix& m, NormKind norm);

/// ‖η(φ)‖({u, v}) with hyperdegrees as AA degrees and |V| as universe size.
double incidence_score(BasePredictor pred, NormKind norm, const Hypergraph& h, VertexId u,
                       VertexId v);

/// All 10 × 4 incidence scores of a pair in one pass over Γ̃(u) × Γ̃(v).
/// Indexed [predictor][norm] in canonical order.
using IncidenceScores = std::array<std::array<double, kNumNorms>, kNumPredictors>;
IncidenceScores incidence_scores(const Hypergraph& h, VertexId u, VertexId v,
                                 std::span<const double> hyperdegree_of);

}  // namespace hyperlp
