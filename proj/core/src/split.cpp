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

#include "hyperlp/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "hyperlp/error.hpp"
#include "hyperlp/log.hpp"
#include "text.hpp"

namespace hyperlp {

std::string_view to_string(SplitMode mode) {
  return mode == SplitMode::kTemporal ? "temporal" : "structural";
}

SplitMode parse_split_mode(std::string_view name) {
  if (text::iequals(name, "temporal")) return SplitMode::kTemporal;
  if (text::iequals(name, "structural")) return SplitMode::kStructural;
  throw InvalidInput("unknown split mode '" + std::string(name) +
                     "' (valid: temporal, structural)");
}

void SplitSpec::validate() const {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidInput("rho must lie in [0, 1]");
  if (p < 1) throw InvalidInput("p must be >= 1");
}

std::size_t ceil_count(double x) {
  if (!(x > 0.0)) return 0;
  double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(x));
}

SplitResult temporal_split(const Hypergraph& h, double rho) {
  if (!h.is_timed()) throw InvalidInput("temporal split needs a timed hypergraph");
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidInput("rho must lie in [0, 1]");

  // Timeline of edge occurrences: the times of hyperedges that induce edges.
  std::vector<double> timeline;
  for (const auto& f : h.hyperedges()) {
    if (f.size() >= 2) timeline.push_back(*f.time());
  }
  std::sort(timeline.begin(), timeline.end());
  timeline.erase(std::unique(timeline.begin(), timeline.end()), timeline.end());
  if (timeline.size() < 2) {
    throw DataError("temporal split needs at least two distinct edge timestamps");
  }

  const std::size_t n_t = timeline.size();
  const std::size_t tau = ceil_count((1.0 - rho) * static_cast<double>(n_t));
  if (tau >= n_t) {
    throw DataError("empty test period: threshold index " + std::to_string(tau) +
                    " covers all " + std::to_string(n_t) + " timestamps");
  }
  if (tau == 0) throw DataError("empty train period (rho = 1)");
  const double threshold = timeline[tau - 1];

  SplitResult out;
  Graph g = clique_expand(h);
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    // Edge time is its first occurrence, so a test edge is never a train edge.
    (g.time(i) <= threshold ? out.train_edges : out.test_links).push_back(g.edges()[i]);
  }
  std::vector<Hyperedge> train;
  for (const auto& f : h.hyperedges()) {
    if (*f.time() <= threshold) train.push_back(f);
  }
  out.train_hypergraph = Hypergraph(h.n_vertices(), std::move(train));
  return out;
}

SplitResult structural_split(const Hypergraph& h, double rho, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidInput("rho must lie in [0, 1]");
  Graph g = clique_expand(h);
  const std::size_t m = g.n_edges();
  if (m == 0) throw DataError("structural split needs at least one edge");
  const std::size_t m_te = ceil_count(rho * static_cast<double>(m));
  if (m_te == 0) throw DataError("empty test set: ceil(rho * m) = 0");
  if (m_te >= m) throw DataError("no train edges left: ceil(rho * m) = m");

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m_te; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, m - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  std::vector<bool> held_out(m, false);
  for (std::size_t i = 0; i < m_te; ++i) held_out[idx[i]] = true;

  SplitResult out;
  for (std::size_t i = 0; i < m; ++i) {
    (held_out[i] ? out.test_links : out.train_edges).push_back(g.edges()[i]);
  }
  out.train_hypergraph =
      Hypergraph(h.n_vertices(), clean_hyperedges(h.hyperedges(), out.test_links));
  return out;
}

namespace {

// Test edges lying inside `vs` (sorted vertex list).
EdgeList contained_edges(std::span<const VertexId> vs, std::span<const Edge> sorted_test,
                         const std::unordered_set<std::uint64_t>& test_keys) {
  EdgeList found;
  const std::size_t pairs = vs.size() * (vs.size() - 1) / 2;
  if (pairs <= sorted_test.size()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        Edge e(vs[i], vs[j]);
        if (test_keys.contains(e.key())) found.push_back(e);
      }
    }
  } else {
    for (const Edge& e : sorted_test) {
      if (std::binary_search(vs.begin(), vs.end(), e.u) &&
          std::binary_search(vs.begin(), vs.end(), e.v)) {
        found.push_back(e);
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Hyperedge> clean_hyperedges(std::span<const Hyperedge> hyperedges,
                                        std::span<const Edge> test_edges) {
  EdgeList sorted_test(test_edges.begin(), test_edges.end());
  canonicalize(sorted_test);
  std::unordered_set<std::uint64_t> keys;
  keys.reserve(sorted_test.size() * 2);
  for (const Edge& e : sorted_test) keys.insert(e.key());

  std::vector<Hyperedge> out;
  out.reserve(hyperedges.size());
  for (const auto& f : hyperedges) {
    EdgeList inside = contained_edges(f.vertices(), sorted_test, keys);
    if (inside.empty()) {
      out.push_back(f);
      continue;
    }
    std::vector<VertexId> removed;
    while (!inside.empty()) {
      // Vertex covering the most remaining test edges; ties to the smallest id.
      std::vector<VertexId> endpoints;
      endpoints.reserve(inside.size() * 2);
      for (const Edge& e : inside) {
        endpoints.push_back(e.u);
        endpoints.push_back(e.v);
      }
      std::sort(endpoints.begin(), endpoints.end());
      VertexId best = endpoints.front();
      std::size_t best_count = 0;
      for (std::size_t i = 0; i < endpoints.size();) {
        std::size_t j = i;
        while (j < endpoints.size() && endpoints[j] == endpoints[i]) ++j;
        if (j - i > best_count) {
          best_count = j - i;
          best = endpoints[i];
        }
        i = j;
      }
      removed.push_back(best);
      std::erase_if(inside, [best](const Edge& e) { return e.u == best || e.v == best; });
    }
    std::sort(removed.begin(), removed.end());
    std::vector<VertexId> kept;
    std::set_difference(f.vertices().begin(), f.vertices().end(), removed.begin(), removed.end(),
                        std::back_inserter(kept));
    if (!kept.empty()) out.emplace_back(std::move(kept), f.time());
  }
  return out;
}

EdgeList sample_negatives(std::size_t n_vertices, std::span<const Edge> excluded, std::size_t k,
                          std::uint64_t seed) {
  if (k == 0) throw InvalidInput("number of negative samples must be >= 1");
  const std::uint64_t total =
      n_vertices < 2 ? 0 : std::uint64_t{n_vertices} * (n_vertices - 1) / 2;
  if (excluded.size() >= total) throw DataError("no non-links available for negative sampling");
  const std::uint64_t available = total - excluded.size();
  std::size_t take = k;
  if (take > available) {
    take = static_cast<std::size_t>(available);
    warn("requested " + std::to_string(k) + " negative samples but only " +
         std::to_string(available) + " non-links exist; sampling all of them");
  }

  std::mt19937_64 rng(seed);
  EdgeList out;
  out.reserve(take);
  if (std::uint64_t{take} * 4 <= available) {
    // Sparse request: rejection sampling over uniformly drawn pairs.
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n_vertices - 1));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(take * 2);
    while (out.size() < take) {
      VertexId a = pick(rng);
      VertexId b = pick(rng);
      if (a == b) continue;
      Edge e(a, b);
      if (contains_edge(excluded, e) || !chosen.insert(e.key()).second) continue;
      out.push_back(e);
    }
  } else {
    EdgeList candidates;
    candidates.reserve(static_cast<std::size_t>(available));
    std::size_t ex = 0;
    for (VertexId u = 0; u < n_vertices; ++u) {
      for (VertexId v = u + 1; v < n_vertices; ++v) {
        Edge e(u, v);
        while (ex < excluded.size() && excluded[ex] < e) ++ex;
        if (ex < excluded.size() && excluded[ex] == e) continue;
        candidates.push_back(e);
      }
    }
    for (std::size_t i = 0; i < take; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
    }
    out.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PreparedDataset prepare(const Hypergraph& h, const SplitSpec& spec) {
  spec.validate();
  SplitResult split = spec.mode == SplitMode::kTemporal ? temporal_split(h, spec.rho)
                                                         : structural_split(h, spec.rho, spec.seed);
  if (split.test_links.empty()) throw DataError("split produced no test links");

  const Graph full = clique_expand(h);
  PreparedDataset out;
  out.spec = spec;
  out.requested_nonlinks = std::size_t{spec.p} * split.test_links.size();
  // Derive the sampling stream from the split seed without reusing it verbatim.
  out.test_nonlinks = sample_negatives(h.n_vertices(), full.edges(), out.requested_nonlinks,
                                       spec.seed ^ 0x9e3779b97f4a7c15ULL);
  out.train_hypergraph = std::move(split.train_hypergraph);
  out.train_edges = std::move(split.train_edges);
  out.test_links = std::move(split.test_links);
  return out;
}

}  // namespace hyperlp
