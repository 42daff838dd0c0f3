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

#include "hyperlp/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "hyperlp/error.hpp"
#include "text.hpp"

namespace hyperlp {

namespace {

constexpr std::array<std::string_view, kNumRepresentations> kReprNames = {"G",  "W",  "Hm",
                                                                          "Ha", "H1", "H2"};
constexpr std::array<std::string_view, 5> kTagNames = {"G", "W", "H", "GH", "WH"};
constexpr std::array<std::string_view, 3> kModeNames = {"standalone", "micro", "macro"};
constexpr std::array<std::string_view, 3> kModePrefixes = {"std", "mic", "mac"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

template <std::size_t N>
std::string join(const std::array<std::string_view, N>& names) {
  std::string out;
  for (auto n : names) out += (out.empty() ? "" : ", ") + std::string(n);
  return out;
}

}  // namespace

std::string_view to_string(Representation r) { return kReprNames[static_cast<std::size_t>(r)]; }

Representation parse_representation(std::string_view name) {
  for (std::size_t i = 0; i < kNumRepresentations; ++i) {
    if (text::iequals(name, kReprNames[i])) return kAllRepresentations[i];
  }
  throw InvalidInput("unknown representation '" + std::string(name) +
                     "' (valid: " + join(kReprNames) + ")");
}

std::string feature_name(BasePredictor pred, Representation repr) {
  return lower(to_string(pred)) + "_" + lower(to_string(repr));
}

std::pair<BasePredictor, Representation> parse_feature_name(std::string_view name) {
  auto sep = name.find('_');
  if (sep == std::string_view::npos) {
    throw InvalidInput("feature name '" + std::string(name) + "' is not <pred>_<repr>");
  }
  return {parse_predictor(name.substr(0, sep)), parse_representation(name.substr(sep + 1))};
}

std::vector<std::string> feature_names() {
  std::vector<std::string> names;
  names.reserve(kNumFeatures);
  for (auto p : kAllPredictors) {
    for (auto r : kAllRepresentations) names.push_back(feature_name(p, r));
  }
  return names;
}

void FeatureTable::add_row(Edge pair, int label, std::span<const double> scores) {
  if (scores.size() != kNumFeatures) {
    throw InvalidInput("feature row needs " + std::to_string(kNumFeatures) + " scores");
  }
  if (label != 0 && label != 1) throw InvalidInput("label must be 0 or 1");
  for (double s : scores) {
    if (!std::isfinite(s)) throw InvalidInput("non-finite feature score");
  }
  pairs_.push_back(pair);
  labels_.push_back(label);
  scores_.insert(scores_.end(), scores.begin(), scores.end());
}

std::vector<double> FeatureTable::column(std::size_t c) const {
  std::vector<double> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out[i] = at(i, c);
  return out;
}

std::size_t FeatureTable::count_label(int label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

void FeatureTable::write_csv(std::ostream& out) const {
  out << "u,v,label";
  for (const auto& name : feature_names()) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    out << pairs_[i].u << ',' << pairs_[i].v << ',' << labels_[i];
    for (double s : row(i)) out << ',' << text::format_double(s);
    out << '\n';
  }
}

void FeatureTable::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  write_csv(out);
}

FeatureTable FeatureTable::read_csv(std::istream& in) {
  std::string line;
  if (!text::getline(in, line)) throw InvalidInput("feature CSV is empty");
  auto header = text::split(line, ',');
  auto names = feature_names();
  bool ok = header.size() == 3 + kNumFeatures && header[0] == "u" && header[1] == "v" &&
            header[2] == "label";
  for (std::size_t c = 0; ok && c < kNumFeatures; ++c) ok = header[3 + c] == names[c];
  if (!ok) throw InvalidInput("feature CSV header does not match the 60 canonical columns");

  FeatureTable table;
  std::vector<double> scores(kNumFeatures);
  std::size_t lineno = 1;
  while (text::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto cells = text::split(line, ',');
    auto bad = [&] {
      return InvalidInput("feature CSV line " + std::to_string(lineno) + " is malformed");
    };
    if (cells.size() != 3 + kNumFeatures) throw bad();
    auto u = text::parse_number<VertexId>(cells[0]);
    auto v = text::parse_number<VertexId>(cells[1]);
    auto label = text::parse_number<int>(cells[2]);
    if (!u || !v || !label) throw bad();
    for (std::size_t c = 0; c < kNumFeatures; ++c) {
      auto s = text::parse_number<double>(cells[3 + c]);
      if (!s) throw bad();
      scores[c] = *s;
    }
    table.add_row(Edge(*u, *v), *label, scores);
  }
  return table;
}

FeatureTable FeatureTable::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_csv(in);
}

FeatureTable compute_features(const PreparedDataset& prepared) {
  EdgeList links = prepared.test_links;
  EdgeList nonlinks = prepared.test_nonlinks;
  canonicalize(links);
  canonicalize(nonlinks);
  EdgeList both;
  std::set_intersection(links.begin(), links.end(), nonlinks.begin(), nonlinks.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw InvalidInput("pair " + std::to_string(both.front().u) + "," +
                       std::to_string(both.front().v) + " is both a test link and a non-link");
  }

  const Hypergraph& h = prepared.train_hypergraph;
  const Graph g = clique_expand(h);
  const Graph gw = weighted_clique_expand(h);
  const auto hdeg = hyperdegrees(h);

  FeatureTable table;
  std::array<double, kNumFeatures> scores{};
  auto add = [&](const Edge& e, int label) {
    if (e.v >= h.n_vertices() || e.u == e.v) throw InvalidInput("test pair out of range");
    const IncidenceScores inc = incidence_scores(h, e.u, e.v, hdeg);
    for (std::size_t p = 0; p < kNumPredictors; ++p) {
      const BasePredictor pred = kAllPredictors[p];
      scores[feature_index(pred, Representation::kG)] = adjacency_score(pred, g, e.u, e.v);
      scores[feature_index(pred, Representation::kW)] = weighted_adjacency_score(pred, gw, e.u, e.v);
      scores[feature_index(pred, Representation::kHm)] = inc[p][0];
      scores[feature_index(pred, Representation::kHa)] = inc[p][1];
      scores[feature_index(pred, Representation::kH1)] = inc[p][2];
      scores[feature_index(pred, Representation::kH2)] = inc[p][3];
    }
    table.add_row(e, label, scores);
  };
  for (const Edge& e : prepared.test_links) add(e, 1);
  for (const Edge& e : prepared.test_nonlinks) add(e, 0);
  return table;
}

std::string_view to_string(CombinationMode m) { return kModeNames[static_cast<std::size_t>(m)]; }

CombinationMode parse_combination_mode(std::string_view name) {
  for (std::size_t i = 0; i < kModeNames.size(); ++i) {
    if (text::iequals(name, kModeNames[i]) || text::iequals(name, kModePrefixes[i])) {
      return static_cast<CombinationMode>(i);
    }
  }
  throw InvalidInput("unknown mode '" + std::string(name) + "' (valid: " + join(kModeNames) + ")");
}

std::string_view to_string(ComboTag t) { return kTagNames[static_cast<std::size_t>(t)]; }

ComboTag parse_combo_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (text::iequals(name, kTagNames[i])) return kAllComboTags[i];
  }
  throw InvalidInput("unknown combination '" + std::string(name) +
                     "' (valid: " + join(kTagNames) + ")");
}

std::vector<Representation> expand(ComboTag tag) {
  using R = Representation;
  const std::vector<R> h = {R::kHm, R::kHa, R::kH1, R::kH2};
  switch (tag) {
    case ComboTag::kG: return {R::kG};
    case ComboTag::kW: return {R::kW};
    case ComboTag::kH: return h;
    case ComboTag::kGH: return {R::kG, R::kHm, R::kHa, R::kH1, R::kH2};
    case ComboTag::kWH: return {R::kW, R::kHm, R::kHa, R::kH1, R::kH2};
  }
  return {};
}

ComboSpec ComboSpec::standalone(BasePredictor base, Representation repr) {
  ComboSpec s;
  s.mode = CombinationMode::kStandalone;
  s.representation = repr;
  s.base = base;
  return s;
}

ComboSpec ComboSpec::micro(BasePredictor base, ComboTag tag) {
  ComboSpec s;
  s.mode = CombinationMode::kMicro;
  s.tag = tag;
  s.base = base;
  return s;
}

ComboSpec ComboSpec::macro(ComboTag tag) {
  ComboSpec s;
  s.mode = CombinationMode::kMacro;
  s.tag = tag;
  return s;
}

std::string ComboSpec::label() const {
  const std::string prefix(kModePrefixes[static_cast<std::size_t>(mode)]);
  if (mode == CombinationMode::kStandalone) return prefix + "-" + std::string(to_string(representation));
  return prefix + "-" + std::string(to_string(tag));
}

std::vector<std::size_t> ComboSpec::columns() const {
  std::vector<std::size_t> cols;
  switch (mode) {
    case CombinationMode::kStandalone:
      if (!base) throw InvalidInput("standalone combination needs a base predictor");
      cols.push_back(feature_index(*base, representation));
      break;
    case CombinationMode::kMicro:
      if (!base) throw InvalidInput("micro combination needs a base predictor");
      for (auto r : expand(tag)) cols.push_back(feature_index(*base, r));
      break;
    case CombinationMode::kMacro:
      for (auto p : kAllPredictors) {
        for (auto r : expand(tag)) cols.push_back(feature_index(p, r));
      }
      break;
  }
  return cols;
}

DesignMatrix select_combination(const FeatureTable& table, const ComboSpec& spec) {
  const auto cols = spec.columns();
  const auto names = feature_names();
  DesignMatrix m;
  m.rows = table.rows();
  m.cols = cols.size();
  m.values.reserve(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t c : cols) m.values.push_back(table.at(i, c));
  }
  m.labels.assign(table.labels().begin(), table.labels().end());
  for (std::size_t c : cols) m.column_names.push_back(names[c]);
  return m;
}

CombinationCounts count_combinations() {
  return {all_combinations(CombinationMode::kStandalone).size(),
          all_combinations(CombinationMode::kMicro).size(),
          all_combinations(CombinationMode::kMacro).size()};
}

std::vector<ComboSpec> all_combinations(CombinationMode mode) {
  std::vector<ComboSpec> out;
  switch (mode) {
    case CombinationMode::kStandalone:
      for (auto p : kAllPredictors) {
        for (auto r : kAllRepresentations) out.push_back(ComboSpec::standalone(p, r));
      }
      break;
    case CombinationMode::kMicro:
      for (auto p : kAllPredictors) {
        for (auto t : kAllComboTags) out.push_back(ComboSpec::micro(p, t));
      }
      break;
    case CombinationMode::kMacro:
      for (auto t : kAllComboTags) out.push_back(ComboSpec::macro(t));
      break;
  }
  return out;
}

}  // namespace hyperlp
