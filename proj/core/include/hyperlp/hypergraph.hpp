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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperlp {

using VertexId = std::uint32_t;
using HyperedgeIndex = std::uint32_t;

/// Unordered vertex pair stored in canonical (min, max) order.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Sorts and deduplicates a list of canonical edges in place.
void canonicalize(EdgeList& edges);
bool contains_edge(std::span<const Edge> sorted_edges, Edge e);

/// A set of vertices with an optional timestamp. Vertices are kept sorted and
/// unique so that equality is set equality.
class Hyperedge {
 public:
  Hyperedge() = default;
  explicit Hyperedge(std::vector<VertexId> vertices,
                     std::optional<double> time = std::nullopt);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(VertexId v) const;
  bool contains(Edge e) const { return contains(e.u) && contains(e.v); }
  const std::optional<double>& time() const { return time_; }

  friend bool operator==(const Hyperedge& a, const Hyperedge& b) {
    return a.vertices_ == b.vertices_ && a.time_ == b.time_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::optional<double> time_;
};

/// Immutable hypergraph H = (V, F) or, when every hyperedge carries a time,
/// a timed hypergraph H = (V, F, T).
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws InvalidInput when a hyperedge references a vertex >= n_vertices,
  /// when a hyperedge is empty, or when only some hyperedges are timed.
  Hypergraph(std::size_t n_vertices, std::vector<Hyperedge> hyperedges);

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_hyperedges() const { return hyperedges_.size(); }
  std::span<const Hyperedge> hyperedges() const { return hyperedges_; }
  const Hyperedge& hyperedge(HyperedgeIndex i) const { return hyperedges_[i]; }
  bool is_timed() const { return timed_; }

  /// Indices of the hyperedges incident on `u`, in ascending order.
  std::span<const HyperedgeIndex> hyperneighbors(VertexId u) const;
  std::size_t hyperdegree(VertexId u) const { return hyperneighbors(u).size(); }

  /// Indices of the hyperedges that contain both endpoints of `e`.
  std::vector<HyperedgeIndex> edge_hyperneighbors(Edge e) const;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Hyperedge> hyperedges_;
  bool timed_ = false;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<HyperedgeIndex> incidence_;
};

/// Immutable undirected simple graph with optional integer weights and
/// optional real timestamps per edge. Adjacency is stored in CSR form with
/// sorted neighbor lists.
class Graph {
 public:
  struct EdgeAttributes {
    std::vector<std::uint32_t> weights;  // empty when unweighted
    std::vector<double> times;           // empty when untimed
  };

  Graph() = default;
  /// `edges` must be canonical, sorted and unique; attribute vectors (when
  /// non-empty) are parallel to `edges`.
  Graph(std::size_t n_vertices, EdgeList edges, EdgeAttributes attributes = {});

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  bool is_weighted() const { return !attributes_.weights.empty(); }
  bool is_timed() const { return !attributes_.times.empty(); }

  std::uint32_t weight(std::size_t edge_index) const {
    return is_weighted() ? attributes_.weights[edge_index] : 1u;
  }
  double time(std::size_t edge_index) const { return attributes_.times[edge_index]; }
  std::optional<std::size_t> find_edge(Edge e) const;

  std::span<const VertexId> neighbors(VertexId u) const;
  /// Weights parallel to neighbors(u); all ones for an unweighted graph.
  std::span<const std::uint32_t> neighbor_weights(VertexId u) const;
  std::size_t degree(VertexId u) const { return neighbors(u).size(); }
  /// Sum of incident edge weights.
  double strength(VertexId u) const { return strength_[u]; }

 private:
  std::size_t n_vertices_ = 0;
  EdgeList edges_;
  EdgeAttributes attributes_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<std::uint32_t> adjacency_weights_;
  std::vector<double> strength_;
};

/// Unweighted clique expansion. A timed hypergraph yields a timed graph where
/// every edge carries the earliest time of a hyperedge containing it.
Graph clique_expand(const Hypergraph& h);

/// Clique expansion whose edge weights count the hyperedges containing each
/// pair (duplicate hyperedges accumulate).
Graph weighted_clique_expand(const Hypergraph& h);

}  // namespace hyperlp
