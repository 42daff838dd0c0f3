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

#include "hyperlp/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperlp/error.hpp"
#include "text.hpp"

namespace hyperlp {

namespace {

constexpr std::array<std::string_view, kNumPredictors> kPredictorNames = {
    "AA", "AS", "CN", "Cos", "PA", "JC", "MxO", "MnO", "NM", "Prn"};

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

double aa_term(double degree) { return degree > 1.0 ? 1.0 / std::log(degree) : 0.0; }

template <typename DegreeFn>
SetOverlap merge_overlap(std::span<const VertexId> x, std::span<const VertexId> y,
                         DegreeFn&& degree) {
  SetOverlap o;
  o.size_x = static_cast<double>(x.size());
  o.size_y = static_cast<double>(y.size());
  std::size_t i = 0, j = 0, common = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++common;
      o.adamic_adar += aa_term(degree(x[i]));
      ++i;
      ++j;
    }
  }
  o.intersection = static_cast<double>(common);
  o.union_size = o.size_x + o.size_y - o.intersection;
  return o;
}

}  // namespace

std::string_view to_string(BasePredictor p) { return kPredictorNames[static_cast<std::size_t>(p)]; }

BasePredictor parse_predictor(std::string_view name) {
  for (std::size_t i = 0; i < kNumPredictors; ++i) {
    if (text::iequals(name, kPredictorNames[i])) return kAllPredictors[i];
  }
  std::string valid;
  for (auto n : kPredictorNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
  throw InvalidInput("unknown base predictor '" + std::string(name) + "' (valid: " + valid + ")");
}

std::string_view to_string(NormKind n) {
  switch (n) {
    case NormKind::kMax: return "max";
    case NormKind::kAvg: return "avg";
    case NormKind::kL1: return "L1";
    case NormKind::kL2: return "L2";
  }
  return "?";
}

double score_from_overlap(BasePredictor pred, const SetOverlap& o, std::size_t universe_size) {
  const double inter = o.intersection;
  const double a = o.size_x;
  const double b = o.size_y;
  switch (pred) {
    case BasePredictor::kAA: return o.adamic_adar;
    case BasePredictor::kAS: return ratio(inter, a * b);
    case BasePredictor::kCN: return inter;
    case BasePredictor::kCos: return ratio(inter, std::sqrt(a * b));
    case BasePredictor::kPA: return a * b;
    case BasePredictor::kJC: return ratio(inter, o.union_size);
    case BasePredictor::kMxO: return ratio(inter, std::max(a, b));
    case BasePredictor::kMnO: return ratio(inter, std::min(a, b));
    case BasePredictor::kNM: return ratio(std::sqrt(2.0) * inter, std::sqrt(a * a + b * b));
    case BasePredictor::kPrn: {
      const double n = static_cast<double>(universe_size);
      const double den = a * b * (n - a) * (n - b);
      return den > 0.0 ? (n * inter - a * b) / std::sqrt(den) : 0.0;
    }
  }
  return 0.0;
}

SetOverlap overlap(std::span<const VertexId> x, std::span<const VertexId> y,
                   std::span<const double> degree_of) {
  return merge_overlap(x, y, [&](VertexId z) { return z < degree_of.size() ? degree_of[z] : 0.0; });
}

double set_similarity(BasePredictor pred, std::span<const VertexId> x, std::span<const VertexId> y,
                      const SimilarityContext& ctx) {
  return score_from_overlap(pred, overlap(x, y, ctx.degree_of), ctx.universe_size);
}

double adjacency_score(BasePredictor pred, const Graph& g, VertexId u, VertexId v) {
  auto o = merge_overlap(g.neighbors(u), g.neighbors(v),
                         [&](VertexId z) { return static_cast<double>(g.degree(z)); });
  return score_from_overlap(pred, o, g.n_vertices());
}

double weighted_adjacency_score(BasePredictor pred, const Graph& g, VertexId u, VertexId v) {
  if (pred == BasePredictor::kPrn) return adjacency_score(pred, g, u, v);
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  auto wu = g.neighbor_weights(u);
  auto wv = g.neighbor_weights(v);
  SetOverlap o;
  o.size_x = g.strength(u);
  o.size_y = g.strength(v);
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nv[j] < nu[i]) {
      ++j;
    } else {
      const double mass = (static_cast<double>(wu[i]) + static_cast<double>(wv[j])) / 2.0;
      o.intersection += mass;
      o.adamic_adar += mass * aa_term(g.strength(nu[i]));
      ++i;
      ++j;
    }
  }
  o.union_size = o.size_x + o.size_y - o.intersection;
  return score_from_overlap(pred, o, g.n_vertices());
}

std::vector<double> hyperdegrees(const Hypergraph& h) {
  std::vector<double> d(h.n_vertices());
  for (VertexId z = 0; z < h.n_vertices(); ++z) d[z] = static_cast<double>(h.hyperdegree(z));
  return d;
}

ScoreMatrix incidence_matrix(BasePredictor pred, const Hypergraph& h, VertexId u, VertexId v,
                             const SimilarityContext& ctx) {
  auto fu = h.hyperneighbors(u);
  auto fv = h.hyperneighbors(v);
  ScoreMatrix m(fu.size(), fv.size());
  for (std::size_t i = 0; i < fu.size(); ++i) {
    for (std::size_t j = 0; j < fv.size(); ++j) {
      m(i, j) = set_similarity(pred, h.hyperedge(fu[i]).vertices(), h.hyperedge(fv[j]).vertices(),
                               ctx);
    }
  }
  return m;
}

double matrix_norm(const ScoreMatrix& m, NormKind norm) {
  if (m.empty()) return 0.0;
  auto values = m.values();
  switch (norm) {
    case NormKind::kMax: return *std::max_element(values.begin(), values.end());
    case NormKind::kAvg: {
      double sum = 0.0;
      for (double x : values) sum += x;
      return sum / static_cast<double>(values.size());
    }
    case NormKind::kL1: {
      double sum = 0.0;
      for (double x : values) sum += std::abs(x);
      return sum;
    }
    case NormKind::kL2: {
      double sum = 0.0;
      for (double x : values) sum += x * x;
      return std::sqrt(sum);
    }
  }
  return 0.0;
}

double incidence_score(BasePredictor pred, NormKind norm, const Hypergraph& h, VertexId u,
                       VertexId v) {
  const auto degrees = hyperdegrees(h);
  SimilarityContext ctx{degrees, h.n_vertices()};
  return matrix_norm(incidence_matrix(pred, h, u, v, ctx), norm);
}

IncidenceScores incidence_scores(const Hypergraph& h, VertexId u, VertexId v,
                                 std::span<const double> hyperdegree_of) {
  IncidenceScores out{};
  auto fu = h.hyperneighbors(u);
  auto fv = h.hyperneighbors(v);
  if (fu.empty() || fv.empty()) return out;

  struct Accumulator {
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double abs_sum = 0.0;
    double sq_sum = 0.0;
  };
  std::array<Accumulator, kNumPredictors> acc{};
  for (HyperedgeIndex a : fu) {
    const auto x = h.hyperedge(a).vertices();
    for (HyperedgeIndex b : fv) {
      const SetOverlap o = overlap(x, h.hyperedge(b).vertices(), hyperdegree_of);
      for (std::size_t p = 0; p < kNumPredictors; ++p) {
        const double s = score_from_overlap(kAllPredictors[p], o, h.n_vertices());
        auto& ac = acc[p];
        ac.max = std::max(ac.max, s);
        ac.sum += s;
        ac.abs_sum += std::abs(s);
        ac.sq_sum += s * s;
      }
    }
  }
  const double cells = static_cast<double>(fu.size() * fv.size());
  for (std::size_t p = 0; p < kNumPredictors; ++p) {
    out[p][static_cast<std::size_t>(NormKind::kMax)] = acc[p].max;
    out[p][static_cast<std::size_t>(NormKind::kAvg)] = acc[p].sum / cells;
    out[p][static_cast<std::size_t>(NormKind::kL1)] = acc[p].abs_sum;
    out[p][static_cast<std::size_t>(NormKind::kL2)] = std::sqrt(acc[p].sq_sum);
  }
  return out;
}

}  // namespace hyperlp
