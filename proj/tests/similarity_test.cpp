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

#include <cmath>

#include <gtest/gtest.h>

#include "hyperlp/similarity.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace hyperlp {
namespace {

using namespace hyperlp::testing;

const std::vector<VertexId> kX = {B, C};
const std::vector<VertexId> kY = {B, C, D};

double sim(BasePredictor p, std::span<const VertexId> x, std::span<const VertexId> y,
           std::size_t n = 5) {
  static const std::vector<double> degrees = {2, 4, 4, 3, 3};  // toy expansion degrees
  return set_similarity(p, x, y, SimilarityContext{degrees, n});
}

TEST(SetSimilarity, HandComputedValues) {
  using P = BasePredictor;
  EXPECT_DOUBLE_EQ(sim(P::kCN, kX, kY), 2.0);
  EXPECT_DOUBLE_EQ(sim(P::kJC, kX, kY), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(sim(P::kPA, kX, kY), 6.0);
  EXPECT_DOUBLE_EQ(sim(P::kAS, kX, kY), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(sim(P::kCos, kX, kY), 2.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(sim(P::kNM, kX, kY), std::sqrt(2.0) * 2.0 / std::sqrt(13.0));
  EXPECT_DOUBLE_EQ(sim(P::kMnO, kX, kY), 1.0);
  EXPECT_DOUBLE_EQ(sim(P::kMxO, kX, kY), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(sim(P::kAA, kX, kY), 2.0 / std::log(4.0));
  // (5*2 - 2*3) / sqrt(2*3*(5-2)*(5-3)) = 4/6
  EXPECT_DOUBLE_EQ(sim(P::kPrn, kX, kY), 2.0 / 3.0);
}

TEST(SetSimilarity, EmptySetGivesZero) {
  for (auto p : kAllPredictors) {
    EXPECT_EQ(sim(p, {}, kY), 0.0) << to_string(p);
    EXPECT_EQ(sim(p, kX, {}), 0.0) << to_string(p);
  }
}

TEST(SetSimilarity, AdamicAdarSkipsDegreeOne) {
  const std::vector<double> degrees = {1, 1, 1};
  const std::vector<VertexId> s = {0, 1};
  EXPECT_EQ(set_similarity(BasePredictor::kAA, s, s, {degrees, 3}), 0.0);
}

TEST(SetSimilarity, PearsonZeroWhenSetIsUniverse) {
  const std::vector<VertexId> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(sim(BasePredictor::kPrn, all, kY), 0.0);
}

TEST(Predictor, NamesRoundTrip) {
  for (auto p : kAllPredictors) EXPECT_EQ(parse_predictor(to_string(p)), p);
  EXPECT_EQ(parse_predictor("mxo"), BasePredictor::kMxO);
  EXPECT_THROW(parse_predictor("katz"), std::invalid_argument);
}

TEST(AdjacencyScore, Toy) {
  const Graph g = clique_expand(toy_hypergraph());
  EXPECT_EQ(adjacency_score(BasePredictor::kCN, g, A, E), 2.0);
  EXPECT_NEAR(adjacency_score(BasePredictor::kAA, g, A, E), 1.4427, 1e-4);
  EXPECT_DOUBLE_EQ(adjacency_score(BasePredictor::kAA, g, A, E), 2.0 / std::log(4.0));
  const Graph sparse(4, {{0, 1}});
  EXPECT_EQ(adjacency_score(BasePredictor::kCN, sparse, 2, 3), 0.0);
}

TEST(WeightedAdjacencyScore, Toy) {
  const Graph gw = weighted_clique_expand(toy_hypergraph());
  EXPECT_DOUBLE_EQ(weighted_adjacency_score(BasePredictor::kCN, gw, A, E), 2.0);
  EXPECT_DOUBLE_EQ(weighted_adjacency_score(BasePredictor::kPA, gw, A, E), 8.0);
  // Prn falls back to the unweighted score.
  EXPECT_DOUBLE_EQ(weighted_adjacency_score(BasePredictor::kPrn, gw, A, E),
                   adjacency_score(BasePredictor::kPrn, gw, A, E));
}

TEST(WeightedAdjacencyScore, UnitWeightsReduceToUnweighted) {
  std::mt19937_64 rng(3);
  const Hypergraph h = random_graph_as_hypergraph(rng, 25, 0.2);
  const Graph g = clique_expand(h);
  const Graph gw = weighted_clique_expand(h);
  for (VertexId u = 0; u < 25; ++u) {
    for (VertexId v = u + 1; v < 25; ++v) {
      for (auto p : kAllPredictors) {
        EXPECT_NEAR(weighted_adjacency_score(p, gw, u, v), adjacency_score(p, g, u, v), 1e-12)
            << to_string(p);
      }
    }
  }
}

TEST(IncidenceMatrix, ToyCommonNeighbors) {
  const Hypergraph h = toy_hypergraph();
  const auto deg = hyperdegrees(h);
  const SimilarityContext ctx{deg, h.n_vertices()};
  for (VertexId other : {E, D}) {
    const ScoreMatrix m = incidence_matrix(BasePredictor::kCN, h, A, other, ctx);
    ASSERT_EQ(m.rows(), 1u);
    ASSERT_EQ(m.cols(), 2u);
    EXPECT_EQ(m(0, 0), 2.0);
    EXPECT_EQ(m(0, 1), 0.0);
  }
  const Hypergraph lonely(3, {Hyperedge({0, 1})});
  const auto d2 = hyperdegrees(lonely);
  const ScoreMatrix empty = incidence_matrix(BasePredictor::kCN, lonely, 0, 2, {d2, 3});
  EXPECT_EQ(empty.rows(), 1u);
  EXPECT_EQ(empty.cols(), 0u);
  EXPECT_TRUE(empty.empty());
}

TEST(MatrixNorm, HandValues) {
  ScoreMatrix m(1, 2);
  m(0, 0) = 2.0;
  EXPECT_EQ(matrix_norm(m, NormKind::kMax), 2.0);
  EXPECT_EQ(matrix_norm(m, NormKind::kAvg), 1.0);
  EXPECT_EQ(matrix_norm(m, NormKind::kL1), 2.0);
  EXPECT_EQ(matrix_norm(m, NormKind::kL2), 2.0);

  const ScoreMatrix zero(2, 3);
  for (auto n : kAllNorms) EXPECT_EQ(matrix_norm(zero, n), 0.0);
  for (auto n : kAllNorms) EXPECT_EQ(matrix_norm(ScoreMatrix(), n), 0.0);

  ScoreMatrix col(2, 1);
  col(0, 0) = 3.0;
  col(1, 0) = 4.0;
  EXPECT_EQ(matrix_norm(col, NormKind::kL2), 5.0);
}

TEST(MatrixNorm, MaxIsSignedL1IsAbsolute) {
  ScoreMatrix m(1, 2);
  m(0, 0) = -3.0;
  m(0, 1) = -1.0;
  EXPECT_EQ(matrix_norm(m, NormKind::kMax), -1.0);
  EXPECT_EQ(matrix_norm(m, NormKind::kL1), 4.0);
  EXPECT_EQ(matrix_norm(m, NormKind::kAvg), -2.0);
}

TEST(IncidenceScore, Toy) {
  const Hypergraph h = toy_hypergraph();
  EXPECT_EQ(incidence_score(BasePredictor::kCN, NormKind::kL1, h, A, E), 2.0);
  const Hypergraph lonely(3, {Hyperedge({0, 1})});
  for (auto p : kAllPredictors) {
    for (auto n : kAllNorms) EXPECT_EQ(incidence_score(p, n, lonely, 0, 2), 0.0);
  }
}

TEST(IncidenceScore, TwoUniformL2IsSqrtOfGraphCNForNonAdjacentPairs) {
  std::mt19937_64 rng(9);
  const Hypergraph h = random_graph_as_hypergraph(rng, 20, 0.3);
  const Graph g = clique_expand(h);
  for (VertexId u = 0; u < 20; ++u) {
    for (VertexId v = u + 1; v < 20; ++v) {
      if (g.find_edge(Edge(u, v))) continue;
      EXPECT_NEAR(incidence_score(BasePredictor::kCN, NormKind::kL2, h, u, v),
                  std::sqrt(adjacency_score(BasePredictor::kCN, g, u, v)), 1e-12);
    }
  }
}

TEST(IncidenceScores, FastPathMatchesMatrixRoute) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 15, 30, 1, 6);
    const auto deg = hyperdegrees(h);
    for (VertexId u = 0; u < 15; ++u) {
      for (VertexId v = u + 1; v < 15; ++v) {
        const auto fast = incidence_scores(h, u, v, deg);
        for (std::size_t p = 0; p < kNumPredictors; ++p) {
          for (std::size_t n = 0; n < kNumNorms; ++n) {
            ASSERT_EQ(fast[p][n], incidence_score(kAllPredictors[p], kAllNorms[n], h, u, v));
          }
        }
      }
    }
  }
}

TEST(IncidenceScore, MatchesNaiveOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 12, 20, 1, 5);
    std::vector<oracle::VertexSet> sets;
    for (const auto& f : h.hyperedges()) sets.emplace_back(f.vertices().begin(), f.vertices().end());
    for (VertexId u = 0; u < 12; ++u) {
      for (VertexId v = u + 1; v < 12; ++v) {
        for (auto p : kAllPredictors) {
          for (auto n : kAllNorms) {
            const double expected = oracle::incidence_score(std::string(to_string(p)),
                                                            std::string(to_string(n)), sets, 12, u, v);
            EXPECT_NEAR(incidence_score(p, n, h, u, v), expected, 1e-12);
          }
        }
      }
    }
  }
}

TEST(GraphAsHypergraph, CommonNeighborNormIdentities) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = random_graph_as_hypergraph(rng, 15, 0.3);
    const Graph g = clique_expand(h);
    for (VertexId u = 0; u < 15; ++u) {
      for (VertexId v = u + 1; v < 15; ++v) {
        const double cn = adjacency_score(BasePredictor::kCN, g, u, v);
        const auto score = [&](NormKind n) { return incidence_score(BasePredictor::kCN, n, h, u, v); };
        if (g.find_edge(Edge(u, v))) {
          // The shared edge {u,v} meets every hyperneighbor of the other endpoint.
          EXPECT_EQ(score(NormKind::kL1), cn + double(g.degree(u) + g.degree(v)));
          EXPECT_EQ(score(NormKind::kMax), 2.0);
          continue;
        }
        EXPECT_EQ(score(NormKind::kL1), cn);
        EXPECT_EQ(score(NormKind::kMax), cn > 0 ? 1.0 : 0.0);
        if (g.degree(u) > 0 && g.degree(v) > 0) {
          EXPECT_NEAR(score(NormKind::kAvg), cn / double(g.degree(u) * g.degree(v)), 1e-12);
        }
        EXPECT_NEAR(score(NormKind::kL2), std::sqrt(cn), 1e-12);
      }
    }
  }
}

TEST(Symmetry, AllScoresSymmetric) {
  std::mt19937_64 rng(41);
  const Hypergraph h = random_hypergraph(rng, 14, 25, 1, 5);
  const Graph g = clique_expand(h);
  const Graph gw = weighted_clique_expand(h);
  const auto deg = hyperdegrees(h);
  for (VertexId u = 0; u < 14; ++u) {
    for (VertexId v = u + 1; v < 14; ++v) {
      const auto a = incidence_scores(h, u, v, deg);
      const auto b = incidence_scores(h, v, u, deg);
      for (std::size_t p = 0; p < kNumPredictors; ++p) {
        const auto pred = kAllPredictors[p];
        EXPECT_DOUBLE_EQ(adjacency_score(pred, g, u, v), adjacency_score(pred, g, v, u));
        EXPECT_DOUBLE_EQ(weighted_adjacency_score(pred, gw, u, v),
                         weighted_adjacency_score(pred, gw, v, u));
        for (std::size_t n = 0; n < kNumNorms; ++n) EXPECT_NEAR(a[p][n], b[p][n], 1e-12);
      }
    }
  }
}

TEST(Monotonicity, AddingHyperedgeNeverLowersCommonNeighborL1) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 12, 15, 1, 5);
    const Hypergraph more_edges = [&] {
      std::vector<Hyperedge> f(h.hyperedges().begin(), h.hyperedges().end());
      f.push_back(random_hypergraph(rng, 12, 1, 2, 6).hyperedge(0));
      return Hypergraph(12, std::move(f));
    }();
    for (VertexId u = 0; u < 12; ++u) {
      for (VertexId v = u + 1; v < 12; ++v) {
        EXPECT_GE(incidence_score(BasePredictor::kCN, NormKind::kL1, more_edges, u, v),
                  incidence_score(BasePredictor::kCN, NormKind::kL1, h, u, v));
      }
    }
  }
}

}  // namespace
}  // namespace hyperlp
