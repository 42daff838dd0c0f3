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
#include <istream>
#include <optional>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

/// A hypergraph together with the original dataset label of every dense
/// vertex id (labels[id] is the label that was remapped to id).
struct LabeledHypergraph {
  Hypergraph hypergraph;
  std::vector<std::int64_t> labels;
};

/// Paths of the three files of a dataset in the simplicial-complex text
/// layout: `<name>-nverts.txt`, `<name>-simplices.txt`, `<name>-times.txt`.
struct BensonPaths {
  std::filesystem::path nverts;
  std::filesystem::path simplices;
  std::optional<std::filesystem::path> times;

  /// Derives the file names from a common prefix such as `data/email-Enron`.
  /// The times file is included only when it exists on disk.
  static BensonPaths from_prefix(const std::filesystem::path& prefix);
};

/// Parses the nverts/simplices(/times) streams. Hyperedges keep file order.
/// Vertex labels are integers and are remapped to dense ids in ascending
/// label order. Duplicate labels inside one simplex are merged.
///
/// Throws InvalidInput naming the offending file and line on a non-integer
/// or empty token, a zero-sized simplex, or a length mismatch between files.
LabeledHypergraph parse_benson(std::istream& nverts, std::istream& simplices,
                               std::istream* times = nullptr);

LabeledHypergraph load_benson(const BensonPaths& paths);

}  // namespace hyperlp
