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

#include "hyperlp/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "hyperlp/error.hpp"

namespace hyperlp {

void canonicalize(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains_edge(std::span<const Edge> sorted_edges, Edge e) {
  return std::binary_search(sorted_edges.begin(), sorted_edges.end(), e);
}

Hyperedge::Hyperedge(std::vector<VertexId> vertices, std::optional<double> time)
    : vertices_(std::move(vertices)), time_(time) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Hyperedge::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Hypergraph::Hypergraph(std::size_t n_vertices, std::vector<Hyperedge> hyperedges)
    : n_vertices_(n_vertices), hyperedges_(std::move(hyperedges)) {
  timed_ = !hyperedges_.empty() && hyperedges_.front().time().has_value();
  std::vector<std::size_t> counts(n_vertices_ + 1, 0);
  for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
    const auto& f = hyperedges_[i];
    if (f.size() == 0) {
      throw InvalidInput("hyperedge " + std::to_string(i) + " is empty");
    }
    if (f.time().has_value() != timed_) {
      throw InvalidInput("hyperedge " + std::to_string(i) +
                         ": either all hyperedges are timed or none are");
    }
    if (f.vertices().back() >= n_vertices_) {
      throw InvalidInput("hyperedge " + std::to_string(i) + " references vertex " +
                         std::to_string(f.vertices().back()) + " >= " +
                         std::to_string(n_vertices_));
    }
    for (VertexId v : f.vertices()) ++counts[v + 1];
  }
  for (std::size_t v = 0; v < n_vertices_; ++v) counts[v + 1] += counts[v];
  incidence_offsets_ = counts;
  incidence_.resize(incidence_offsets_.back());
  for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
    for (VertexId v : hyperedges_[i].vertices()) {
      incidence_[counts[v]++] = static_cast<HyperedgeIndex>(i);
    }
  }
}

std::span<const HyperedgeIndex> Hypergraph::hyperneighbors(VertexId u) const {
  if (u >= n_vertices_) return {};
  return std::span<const HyperedgeIndex>(incidence_).subspan(
      incidence_offsets_[u], incidence_offsets_[u + 1] - incidence_offsets_[u]);
}

std::vector<HyperedgeIndex> Hypergraph::edge_hyperneighbors(Edge e) const {
  auto a = hyperneighbors(e.u);
  auto b = hyperneighbors(e.v);
  std::vector<HyperedgeIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph::Graph(std::size_t n_vertices, EdgeList edges, EdgeAttributes attributes)
    : n_vertices_(n_vertices), edges_(std::move(edges)), attributes_(std::move(attributes)) {
  if (!attributes_.weights.empty() && attributes_.weights.size() != edges_.size()) {
    throw InvalidInput("edge weight count does not match edge count");
  }
  if (!attributes_.times.empty() && attributes_.times.size() != edges_.size()) {
    throw InvalidInput("edge time count does not match edge count");
  }
  std::vector<std::size_t> counts(n_vertices_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw InvalidInput("self-loop on vertex " + std::to_string(e.u));
    if (e.v >= n_vertices_) throw InvalidInput("edge references vertex out of range");
    if (i > 0 && !(edges_[i - 1] < e)) throw InvalidInput("edges must be sorted and unique");
    if (is_weighted() && attributes_.weights[i] < 1) throw InvalidInput("edge weight must be >= 1");
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (std::size_t v = 0; v < n_vertices_; ++v) counts[v + 1] += counts[v];
  offsets_ = counts;
  adjacency_.resize(offsets_.back());
  adjacency_weights_.resize(offsets_.back());
  strength_.assign(n_vertices_, 0.0);
  // Edges are sorted by (u, v), so each vertex's list is filled in ascending
  // order: first the smaller endpoints (as v), then the larger ones (as u).
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    std::uint32_t w = weight(i);
    adjacency_[counts[e.v]] = e.u;
    adjacency_weights_[counts[e.v]++] = w;
    strength_[e.u] += w;
    strength_[e.v] += w;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[counts[e.u]] = e.v;
    adjacency_weights_[counts[e.u]++] = weight(i);
  }
}

std::optional<std::size_t> Graph::find_edge(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const VertexId> Graph::neighbors(VertexId u) const {
  if (u >= n_vertices_) return {};
  return std::span<const VertexId>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::span<const std::uint32_t> Graph::neighbor_weights(VertexId u) const {
  if (u >= n_vertices_) return {};
  return std::span<const std::uint32_t>(adjacency_weights_)
      .subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

namespace {

struct PairOccurrence {
  Edge edge;
  double time;
};

Graph expand(const Hypergraph& h, bool weighted) {
  std::vector<PairOccurrence> occ;
  std::size_t total = 0;
  for (const auto& f : h.hyperedges()) total += f.size() * (f.size() - 1) / 2;
  occ.reserve(total);
  for (const auto& f : h.hyperedges()) {
    auto vs = f.vertices();
    double t = f.time().value_or(0.0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) occ.push_back({Edge(vs[i], vs[j]), t});
    }
  }
  std::sort(occ.begin(), occ.end(), [](const PairOccurrence& a, const PairOccurrence& b) {
    return std::tie(a.edge, a.time) < std::tie(b.edge, b.time);
  });

  EdgeList edges;
  Graph::EdgeAttributes attrs;
  for (std::size_t i = 0; i < occ.size();) {
    std::size_t j = i;
    while (j < occ.size() && occ[j].edge == occ[i].edge) ++j;
    edges.push_back(occ[i].edge);
    if (weighted) attrs.weights.push_back(static_cast<std::uint32_t>(j - i));
    if (h.is_timed()) attrs.times.push_back(occ[i].time);  // earliest occurrence
    i = j;
  }
  return Graph(h.n_vertices(), std::move(edges), std::move(attrs));
}

}  // namespace

Graph clique_expand(const Hypergraph& h) { return expand(h, false); }

Graph weighted_clique_expand(const Hypergraph& h) { return expand(h, true); }

}  // namespace hyperlp
