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

#include <cstdint>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp::testing {

// Vertex ids of the five-author toy: groups ABC, BCDE and DE.
inline constexpr VertexId A = 0, B = 1, C = 2, D = 3, E = 4;

inline Hypergraph toy_hypergraph(bool timed = false) {
  auto t = [&](double x) { return timed ? std::optional<double>(x) : std::nullopt; };
  return Hypergraph(5, {Hyperedge({A, B, C}, t(1)), Hyperedge({B, C, D, E}, t(2)),
                        Hyperedge({D, E}, t(3))});
}

/// Uniformly random hypergraph: `n_edges` hyperedges with sizes drawn from
/// [min_size, max_size], members drawn uniformly from n_vertices.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n_vertices,
                                    std::size_t n_edges, std::size_t min_size,
                                    std::size_t max_size, bool timed = false) {
  std::uniform_int_distribution<std::size_t> size(min_size, std::min(max_size, n_vertices));
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n_vertices - 1));
  std::uniform_int_distribution<int> time(0, 20);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < n_edges; ++i) {
    std::vector<VertexId> vs;
    const std::size_t s = size(rng);
    while (vs.size() < s) {
      VertexId v = vertex(rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    std::optional<double> t;
    if (timed) t = time(rng);
    edges.emplace_back(std::move(vs), t);
  }
  return Hypergraph(n_vertices, std::move(edges));
}

/// Erdős–Rényi graph encoded as a 2-uniform hypergraph.
inline Hypergraph random_graph_as_hypergraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Hyperedge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(std::vector<VertexId>{u, v});
    }
  }
  return Hypergraph(n, std::move(edges));
}

/// Planted team structure: vertices split into `n_groups` communities, each
/// community holds overlapping teams of `team_size` members (every vertex sits
/// in about `teams_per_vertex` teams), and each hyperedge is a small subset of
/// one team in which each member is swapped for a random outsider with
/// probability `noise`. Sizes start at 2 and grow geometrically. Timestamps
/// are increasing integers.
struct PlantedSpec {
  std::size_t n_vertices = 200;
  std::size_t n_groups = 8;
  std::size_t n_hyperedges = 1500;
  std::size_t max_size = 5;
  double size_decay = 0.45;  // P(size > s | size >= s)
  std::size_t team_size = 8;
  std::size_t teams_per_vertex = 3;
  double noise = 0.15;
};

inline Hypergraph planted_hypergraph(const PlantedSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t group_size = spec.n_vertices / spec.n_groups;
  const std::size_t team_size = std::min(spec.team_size, group_size);
  const std::size_t teams_per_group =
      std::max<std::size_t>(1, group_size * spec.teams_per_vertex / team_size);
  std::vector<std::vector<VertexId>> teams;
  for (std::size_t g = 0; g < spec.n_groups; ++g) {
    for (std::size_t t = 0; t < teams_per_group; ++t) {
      std::vector<VertexId> members(group_size);
      std::iota(members.begin(), members.end(), static_cast<VertexId>(g * group_size));
      std::shuffle(members.begin(), members.end(), rng);
      members.resize(team_size);
      teams.push_back(std::move(members));
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, teams.size() - 1);
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(spec.n_vertices - 1));
  std::bernoulli_distribution grow(spec.size_decay), outsider(spec.noise);
  std::vector<Hyperedge> edges;
  edges.reserve(spec.n_hyperedges);
  for (std::size_t i = 0; i < spec.n_hyperedges; ++i) {
    std::vector<VertexId> team = teams[pick(rng)];
    std::size_t s = 2;
    while (s < spec.max_size && grow(rng)) ++s;
    std::shuffle(team.begin(), team.end(), rng);
    std::vector<VertexId> vs(team.begin(), team.begin() + static_cast<std::ptrdiff_t>(std::min(s, team.size())));
    for (auto& v : vs) {
      if (outsider(rng)) v = any(rng);
    }
    edges.emplace_back(std::move(vs), static_cast<double>(i / 10));
  }
  return Hypergraph(spec.n_vertices, std::move(edges));
}

/// Writes a hypergraph in the nverts/simplices/times layout with label
/// `id + label_offset`. Returns the prefix.
inline std::filesystem::path write_benson(const Hypergraph& h, const std::filesystem::path& dir,
                                          const std::string& name, std::int64_t label_offset = 1) {
  std::filesystem::create_directories(dir);
  const auto prefix = dir / name;
  std::ofstream nverts(prefix.string() + "-nverts.txt");
  std::ofstream simplices(prefix.string() + "-simplices.txt");
  std::optional<std::ofstream> times;
  if (h.is_timed()) times.emplace(prefix.string() + "-times.txt");
  for (const auto& f : h.hyperedges()) {
    nverts << f.size() << '\n';
    for (VertexId v : f.vertices()) simplices << (std::int64_t{v} + label_offset) << '\n';
    if (times) *times << static_cast<std::int64_t>(*f.time()) << '\n';
  }
  return prefix;
}

/// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hyperlp_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace hyperlp::testing
