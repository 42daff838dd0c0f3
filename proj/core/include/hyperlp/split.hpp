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
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

enum class SplitMode { kTemporal, kStructural };

std::string_view to_string(SplitMode mode);
SplitMode parse_split_mode(std::string_view name);

struct SplitSpec {
  SplitMode mode = SplitMode::kStructural;
  double rho = 0.2;        // fraction of the timeline / edges held out
  std::uint32_t p = 5;     // negatives per positive test link
  std::uint64_t seed = 0;

  /// Throws InvalidInput unless 0 <= rho <= 1 and p >= 1.
  void validate() const;
};

/// Result of a temporal or structural split, before negative sampling.
struct SplitResult {
  Hypergraph train_hypergraph;  // (V, F_tr)
  EdgeList train_edges;         // E_tr, sorted
  EdgeList test_links;          // E_te, sorted
};

/// One link-prediction problem instance.
struct PreparedDataset {
  SplitSpec spec;
  Hypergraph train_hypergraph;
  EdgeList train_edges;
  EdgeList test_links;
  EdgeList test_nonlinks;
  std::size_t requested_nonlinks = 0;  // p * |E_te| before capping
};

/// ceil(x) ignoring floating-point noise just above an integer:
/// ceil_count((1 - 0.2) * 5) == 4.
std::size_t ceil_count(double x);

/// Splits a timed hypergraph at time index ceil((1 - rho) * n_T) of the
/// timeline of edge occurrences. Test links are the pairs that first appear
/// after the threshold.
SplitResult temporal_split(const Hypergraph& h, double rho);

/// Holds out ceil(rho * m) uniformly sampled expansion edges and strips them
/// from the hyperedges with clean_hyperedges().
SplitResult structural_split(const Hypergraph& h, double rho, std::uint64_t seed);

/// Removes, from every hyperedge, the fewest vertices (greedy by coverage,
/// ties to the smallest id) such that no test edge remains inside it.
/// Hyperedges that contain no test edge pass through unchanged; hyperedges
/// that become empty are dropped. Timestamps are preserved.
std::vector<Hyperedge> clean_hyperedges(std::span<const Hyperedge> hyperedges,
                                        std::span<const Edge> test_edges);

/// Samples min(k, available) vertex pairs uniformly without replacement from
/// the complement of `excluded` (which must be sorted). The result is sorted.
/// Warns when the request is capped; throws DataError when no pair is
/// available and InvalidInput when k == 0.
EdgeList sample_negatives(std::size_t n_vertices, std::span<const Edge> excluded,
                          std::size_t k, std::uint64_t seed);

/// Runs the split for spec.mode followed by negative sampling with
/// k = p * |E_te| from the complement of the full expansion edge set.
PreparedDataset prepare(const Hypergraph& h, const SplitSpec& spec);

/// Directory layout: train_hyperedges.txt, train_edges.txt, test_links.txt,
/// test_nonlinks.txt, split_meta.json and (when labels are given)
/// vertex_labels.txt.
void save_prepared(const PreparedDataset& data, const std::filesystem::path& dir,
                   std::span<const std::int64_t> vertex_labels = {});
PreparedDataset load_prepared(const std::filesystem::path& dir);

}  // namespace hyperlp
