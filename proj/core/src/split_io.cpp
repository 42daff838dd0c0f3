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

#include <fstream>
#include <string>

#include <json.hpp>

#include "hyperlp/error.hpp"
#include "hyperlp/split.hpp"
#include "text.hpp"

namespace hyperlp {
namespace {

namespace fs = std::filesystem;

std::ofstream create(const fs::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + p.string());
  return out;
}

std::ifstream open(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + p.string());
  return in;
}

void write_edges(const fs::path& p, std::span<const Edge> edges) {
  auto out = create(p);
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

EdgeList read_edges(const fs::path& p, std::size_t n_vertices) {
  auto in = open(p);
  EdgeList edges;
  std::string line;
  std::size_t lineno = 0;
  while (text::getline(in, line)) {
    ++lineno;
    auto toks = text::tokens(line);
    if (toks.empty()) continue;
    std::optional<VertexId> u, v;
    if (toks.size() == 2) {
      u = text::parse_number<VertexId>(toks[0]);
      v = text::parse_number<VertexId>(toks[1]);
    }
    if (!u || !v || *u == *v || *u >= n_vertices || *v >= n_vertices) {
      throw InvalidInput(p.string() + ":" + std::to_string(lineno) + ": malformed vertex pair");
    }
    edges.emplace_back(*u, *v);
  }
  return edges;
}

}  // namespace

void save_prepared(const PreparedDataset& data, const fs::path& dir,
                   std::span<const std::int64_t> vertex_labels) {
  fs::create_directories(dir);
  {
    auto out = create(dir / "train_hyperedges.txt");
    for (const auto& f : data.train_hypergraph.hyperedges()) {
      auto vs = f.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
      out << '\n';
    }
  }
  write_edges(dir / "train_edges.txt", data.train_edges);
  write_edges(dir / "test_links.txt", data.test_links);
  write_edges(dir / "test_nonlinks.txt", data.test_nonlinks);
  if (!vertex_labels.empty()) {
    auto out = create(dir / "vertex_labels.txt");
    for (std::size_t i = 0; i < vertex_labels.size(); ++i) out << i << ' ' << vertex_labels[i] << '\n';
  }

  nlohmann::ordered_json meta;
  meta["mode"] = std::string(to_string(data.spec.mode));
  meta["rho"] = data.spec.rho;
  meta["p"] = data.spec.p;
  meta["seed"] = data.spec.seed;
  meta["n_vertices"] = data.train_hypergraph.n_vertices();
  meta["train_hyperedges"] = data.train_hypergraph.n_hyperedges();
  meta["train_edges"] = data.train_edges.size();
  meta["test_links"] = data.test_links.size();
  meta["test_nonlinks"] = data.test_nonlinks.size();
  meta["requested_nonlinks"] = data.requested_nonlinks;
  create(dir / "split_meta.json") << meta.dump(2) << '\n';
}

PreparedDataset load_prepared(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InvalidInput("split directory " + dir.string() + " not found");
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(open(dir / "split_meta.json"));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed split_meta.json: " + std::string(e.what()));
  }

  PreparedDataset data;
  std::size_t n_vertices = 0;
  try {
    data.spec.mode = parse_split_mode(meta.at("mode").get<std::string>());
    data.spec.rho = meta.at("rho").get<double>();
    data.spec.p = meta.at("p").get<std::uint32_t>();
    data.spec.seed = meta.at("seed").get<std::uint64_t>();
    n_vertices = meta.at("n_vertices").get<std::size_t>();
    data.requested_nonlinks = meta.value("requested_nonlinks", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed split_meta.json: " + std::string(e.what()));
  }

  std::vector<Hyperedge> hyperedges;
  {
    auto in = open(dir / "train_hyperedges.txt");
    std::string line;
    std::size_t lineno = 0;
    while (text::getline(in, line)) {
      ++lineno;
      auto toks = text::tokens(line);
      if (toks.empty()) continue;
      std::vector<VertexId> vs;
      for (auto t : toks) {
        auto v = text::parse_number<VertexId>(t);
        if (!v || *v >= n_vertices) {
          throw InvalidInput("train_hyperedges.txt:" + std::to_string(lineno) + ": bad vertex id");
        }
        vs.push_back(*v);
      }
      hyperedges.emplace_back(std::move(vs));
    }
  }
  data.train_hypergraph = Hypergraph(n_vertices, std::move(hyperedges));
  data.train_edges = read_edges(dir / "train_edges.txt", n_vertices);
  data.test_links = read_edges(dir / "test_links.txt", n_vertices);
  data.test_nonlinks = read_edges(dir / "test_nonlinks.txt", n_vertices);
  return data;
}

}  // namespace hyperlp
