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

#include "hyperlp/benson.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "hyperlp/error.hpp"
#include "text.hpp"

namespace hyperlp {
namespace {

[[noreturn]] void fail(std::string_view file, std::size_t line, std::string_view what) {
  throw InvalidInput(std::string(file) + ":" + std::to_string(line) + ": " + std::string(what));
}

// Reads one token per non-empty line. Blank lines are skipped but still
// counted for error messages.
template <typename T>
std::vector<T> read_column(std::istream& in, std::string_view file) {
  std::vector<T> values;
  std::string line;
  std::size_t lineno = 0;
  while (text::getline(in, line)) {
    ++lineno;
    auto token = text::trim(line);
    if (token.empty()) continue;
    auto value = text::parse_number<T>(token);
    if (!value) fail(file, lineno, "expected a number, got '" + std::string(token) + "'");
    values.push_back(*value);
  }
  return values;
}

std::ifstream open(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + p.string());
  return in;
}

}  // namespace

BensonPaths BensonPaths::from_prefix(const std::filesystem::path& prefix) {
  BensonPaths paths;
  paths.nverts = prefix.string() + "-nverts.txt";
  paths.simplices = prefix.string() + "-simplices.txt";
  std::filesystem::path times = prefix.string() + "-times.txt";
  if (std::filesystem::exists(times)) paths.times = times;
  return paths;
}

LabeledHypergraph parse_benson(std::istream& nverts_in, std::istream& simplices_in,
                               std::istream* times_in) {
  std::vector<std::size_t> sizes;
  {
    std::string line;
    std::size_t lineno = 0;
    while (text::getline(nverts_in, line)) {
      ++lineno;
      auto token = text::trim(line);
      if (token.empty()) continue;
      auto n = text::parse_number<std::int64_t>(token);
      if (!n) fail("nverts", lineno, "expected an integer, got '" + std::string(token) + "'");
      if (*n <= 0) fail("nverts", lineno, "empty simplex (size " + std::to_string(*n) + ")");
      sizes.push_back(static_cast<std::size_t>(*n));
    }
  }

  auto labels = read_column<std::int64_t>(simplices_in, "simplices");
  std::size_t expected = 0;
  for (auto s : sizes) expected += s;
  if (labels.size() != expected) {
    throw InvalidInput("length mismatch: nverts sums to " + std::to_string(expected) +
                       " vertices but simplices has " + std::to_string(labels.size()));
  }

  std::vector<double> times;
  if (times_in != nullptr) {
    times = read_column<double>(*times_in, "times");
    if (times.size() != sizes.size()) {
      throw InvalidInput("length mismatch: " + std::to_string(sizes.size()) +
                         " simplices but " + std::to_string(times.size()) + " timestamps");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (!std::isfinite(times[i])) fail("times", i + 1, "non-finite timestamp");
    }
  }

  std::vector<std::int64_t> distinct = labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto dense = [&](std::int64_t label) {
    return static_cast<VertexId>(std::lower_bound(distinct.begin(), distinct.end(), label) -
                                 distinct.begin());
  };

  std::vector<Hyperedge> hyperedges;
  hyperedges.reserve(sizes.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<VertexId> vs;
    vs.reserve(sizes[i]);
    for (std::size_t k = 0; k < sizes[i]; ++k) vs.push_back(dense(labels[pos++]));
    std::optional<double> t;
    if (times_in != nullptr) t = times[i];
    hyperedges.emplace_back(std::move(vs), t);
  }

  LabeledHypergraph out;
  out.hypergraph = Hypergraph(distinct.size(), std::move(hyperedges));
  out.labels = std::move(distinct);
  return out;
}

LabeledHypergraph load_benson(const BensonPaths& paths) {
  auto nverts = open(paths.nverts);
  auto simplices = open(paths.simplices);
  if (paths.times) {
    auto times = open(*paths.times);
    return parse_benson(nverts, simplices, &times);
  }
  return parse_benson(nverts, simplices, nullptr);
}

}  // namespace hyperlp
