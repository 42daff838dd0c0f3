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

#include "hyperlp/pipeline.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hyperlp/benson.hpp"
#include "hyperlp/error.hpp"
#include "text.hpp"

namespace hyperlp {

namespace fs = std::filesystem;

namespace {

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
  auto v = text::parse_number<T>(value);
  if (!v) {
    throw UsageError("invalid value '" + std::string(value) + "' for '" + std::string(key) + "'");
  }
  return *v;
}

// Re-throws name-parsing errors as usage errors, keeping the message that
// lists the valid values.
template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::ofstream create(const fs::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + p.string());
  return out;
}

void echo_config(const PipelineConfig& cfg, std::string_view command) {
  fs::create_directories(cfg.output_dir);
  create(cfg.output_dir / ("config." + std::string(command) + ".ini")) << cfg.to_text();
}

}  // namespace

void PipelineConfig::set(std::string_view key, std::string_view raw) {
  const std::string value(text::trim(raw));
  using Setter = std::function<void(PipelineConfig&, const std::string&)>;
  static const std::map<std::string, Setter, std::less<>> setters = {
      {"dataset", [](PipelineConfig& c, const std::string& v) { c.dataset = v; }},
      {"nverts", [](PipelineConfig& c, const std::string& v) { c.nverts = v; }},
      {"simplices", [](PipelineConfig& c, const std::string& v) { c.simplices = v; }},
      {"times", [](PipelineConfig& c, const std::string& v) { c.times = v; }},
      {"output_dir", [](PipelineConfig& c, const std::string& v) { c.output_dir = v; }},
      {"split_mode",
       [](PipelineConfig& c, const std::string& v) {
         c.split.mode = as_usage([&] { return parse_split_mode(v); });
       }},
      {"rho", [](PipelineConfig& c, const std::string& v) { c.split.rho = parse_value<double>("rho", v); }},
      {"p", [](PipelineConfig& c, const std::string& v) { c.split.p = parse_value<std::uint32_t>("p", v); }},
      {"seed",
       [](PipelineConfig& c, const std::string& v) { c.split.seed = parse_value<std::uint64_t>("seed", v); }},
      {"bins",
       [](PipelineConfig& c, const std::string& v) { c.binning.n_bins = parse_value<std::size_t>("bins", v); }},
      {"n_trees",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.n_trees = parse_value<std::size_t>("n_trees", v);
       }},
      {"max_depth",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.max_depth = parse_value<std::size_t>("max_depth", v);
       }},
      {"learning_rate",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.learning_rate = parse_value<double>("learning_rate", v);
       }},
      {"subsample",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.subsample = parse_value<double>("subsample", v);
       }},
      {"lambda",
       [](PipelineConfig& c, const std::string& v) { c.classifier.lambda = parse_value<double>("lambda", v); }},
      {"min_child_weight",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.min_child_weight = parse_value<double>("min_child_weight", v);
       }},
      {"classifier_seed",
       [](PipelineConfig& c, const std::string& v) {
         c.classifier.seed = parse_value<std::uint64_t>("classifier_seed", v);
       }},
      {"classification_ratio",
       [](PipelineConfig& c, const std::string& v) {
         c.classification_ratio = parse_value<double>("classification_ratio", v);
       }},
      {"predict_mode",
       [](PipelineConfig& c, const std::string& v) {
         c.predict_mode = as_usage([&] { return parse_combination_mode(v); });
       }},
      {"combo", [](PipelineConfig& c, const std::string& v) { c.combo = v; }},
      {"base", [](PipelineConfig& c, const std::string& v) { c.base = v; }},
  };
  auto it = setters.find(key);
  if (it == setters.end()) {
    std::string valid;
    for (const auto& [k, _] : setters) valid += (valid.empty() ? "" : ", ") + k;
    throw UsageError("unknown config key '" + std::string(key) + "' (valid: " + valid + ")");
  }
  it->second(*this, value);
}

std::string PipelineConfig::to_text() const {
  std::ostringstream out;
  out << "dataset = " << dataset << '\n'
      << "nverts = " << nverts << '\n'
      << "simplices = " << simplices << '\n'
      << "times = " << times << '\n'
      << "output_dir = " << output_dir.string() << '\n'
      << "split_mode = " << to_string(split.mode) << '\n'
      << "rho = " << text::format_double(split.rho) << '\n'
      << "p = " << split.p << '\n'
      << "seed = " << split.seed << '\n'
      << "bins = " << binning.n_bins << '\n'
      << "n_trees = " << classifier.n_trees << '\n'
      << "max_depth = " << classifier.max_depth << '\n'
      << "learning_rate = " << text::format_double(classifier.learning_rate) << '\n'
      << "subsample = " << text::format_double(classifier.subsample) << '\n'
      << "lambda = " << text::format_double(classifier.lambda) << '\n'
      << "min_child_weight = " << text::format_double(classifier.min_child_weight) << '\n'
      << "classifier_seed = " << classifier.seed << '\n'
      << "classification_ratio = " << text::format_double(classification_ratio) << '\n'
      << "predict_mode = " << to_string(predict_mode) << '\n'
      << "combo = " << combo << '\n'
      << "base = " << base << '\n';
  return out.str();
}

PipelineConfig::DatasetFiles PipelineConfig::dataset_files() const {
  DatasetFiles files;
  if (!dataset.empty()) {
    const auto paths = BensonPaths::from_prefix(dataset);
    files.nverts = paths.nverts;
    files.simplices = paths.simplices;
    files.times = paths.times;
  }
  if (!nverts.empty()) files.nverts = nverts;
  if (!simplices.empty()) files.simplices = simplices;
  if (!times.empty()) files.times = fs::path(times);
  if (files.nverts.empty() || files.simplices.empty()) {
    throw UsageError("no dataset configured: set 'dataset' or both 'nverts' and 'simplices'");
  }
  return files;
}

std::filesystem::path PipelineConfig::predict_path(CombinationMode mode) const {
  return output_dir / ("predict_" + std::string(to_string(mode)) + ".csv");
}

std::filesystem::path PipelineConfig::rank_path(CombinationMode mode) const {
  return output_dir / ("rank_" + std::string(to_string(mode)) + ".csv");
}

std::vector<ComboSpec> PipelineConfig::selected_combinations() const {
  return as_usage([&] {
    std::optional<BasePredictor> want_base;
    if (!base.empty()) want_base = parse_predictor(base);
    std::optional<Representation> want_repr;
    std::optional<ComboTag> want_tag;
    if (!combo.empty()) {
      if (predict_mode == CombinationMode::kStandalone) {
        want_repr = parse_representation(combo);
      } else {
        want_tag = parse_combo_tag(combo);
      }
    }
    if (want_base && predict_mode == CombinationMode::kMacro) {
      throw UsageError("macro combinations use all base predictors; drop --base");
    }
    std::vector<ComboSpec> out;
    for (const auto& spec : all_combinations(predict_mode)) {
      if (want_base && spec.base != want_base) continue;
      if (want_repr && spec.representation != *want_repr) continue;
      if (want_tag && spec.tag != *want_tag) continue;
      out.push_back(spec);
    }
    return out;
  });
}

PipelineConfig parse_config(std::string_view content) {
  PipelineConfig cfg;
  std::size_t lineno = 0;
  for (auto line : text::split(content, '\n')) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    cfg.set(text::trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

PipelineConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void cmd_split(const PipelineConfig& cfg) {
  const auto files = cfg.dataset_files();
  if (cfg.split.mode == SplitMode::kTemporal && !files.times) {
    throw UsageError("temporal split needs a times file");
  }
  as_usage([&] { cfg.split.validate(); });
  BensonPaths paths{files.nverts, files.simplices, files.times};
  if (cfg.split.mode == SplitMode::kStructural) paths.times.reset();  // time is ignored
  const LabeledHypergraph data = load_benson(paths);
  const PreparedDataset prepared = prepare(data.hypergraph, cfg.split);
  save_prepared(prepared, cfg.split_dir(), data.labels);
  echo_config(cfg, "split");
}

void cmd_features(const PipelineConfig& cfg) {
  const PreparedDataset prepared = load_prepared(cfg.split_dir());
  if (prepared.test_links.empty()) throw DataError("prepared dataset has no test links");
  const FeatureTable table = compute_features(prepared);
  fs::create_directories(cfg.output_dir);
  table.save_csv(cfg.features_path());
  echo_config(cfg, "features");
}

void write_mi_csv(std::ostream& out, std::span<const FeatureInformation> report) {
  out << "feature,mi_bits\n";
  for (const auto& r : report) out << r.feature << ',' << text::format_double(r.mi_bits) << '\n';
}

void cmd_mi(const PipelineConfig& cfg) {
  as_usage([&] { cfg.binning.validate(); });
  const FeatureTable table = FeatureTable::load_csv(cfg.features_path());
  const auto report = mi_report(table, cfg.binning);
  auto out = create(cfg.mi_path());
  write_mi_csv(out, report);
  echo_config(cfg, "mi");
}

void write_eval_csv(std::ostream& out, std::span<const EvalResult> results) {
  out << "mode,combo,base,auc,n_pos,n_neg,seed\n";
  for (const auto& r : results) {
    const auto& c = r.combo;
    out << to_string(c.mode) << ','
        << (c.mode == CombinationMode::kStandalone ? to_string(c.representation) : to_string(c.tag))
        << ',' << (c.base ? to_string(*c.base) : std::string_view{}) << ','
        << text::format_double(r.auc) << ',' << r.n_pos << ',' << r.n_neg << ',' << r.seed << '\n';
  }
}

std::vector<EvalResult> read_eval_csv(std::istream& in) {
  std::string line;
  if (!text::getline(in, line) || line != "mode,combo,base,auc,n_pos,n_neg,seed") {
    throw InvalidInput("evaluation CSV has an unexpected header");
  }
  std::vector<EvalResult> out;
  std::size_t lineno = 1;
  while (text::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto cells = text::split(line, ',');
    auto bad = [&] { return InvalidInput("evaluation CSV line " + std::to_string(lineno) + " is malformed"); };
    if (cells.size() != 7) throw bad();
    EvalResult r;
    const auto mode = parse_combination_mode(cells[0]);
    std::optional<BasePredictor> base;
    if (!cells[2].empty()) base = parse_predictor(cells[2]);
    switch (mode) {
      case CombinationMode::kStandalone:
        if (!base) throw bad();
        r.combo = ComboSpec::standalone(*base, parse_representation(cells[1]));
        break;
      case CombinationMode::kMicro:
        if (!base) throw bad();
        r.combo = ComboSpec::micro(*base, parse_combo_tag(cells[1]));
        break;
      case CombinationMode::kMacro:
        r.combo = ComboSpec::macro(parse_combo_tag(cells[1]));
        break;
    }
    auto auc = text::parse_number<double>(cells[3]);
    auto n_pos = text::parse_number<std::size_t>(cells[4]);
    auto n_neg = text::parse_number<std::size_t>(cells[5]);
    auto seed = text::parse_number<std::uint64_t>(cells[6]);
    if (!auc || !n_pos || !n_neg || !seed) throw bad();
    r.auc = *auc;
    r.n_pos = *n_pos;
    r.n_neg = *n_neg;
    r.seed = *seed;
    out.push_back(r);
  }
  return out;
}

std::vector<EvalResult> cmd_predict(const PipelineConfig& cfg) {
  const auto combos = cfg.selected_combinations();
  if (cfg.predict_mode != CombinationMode::kStandalone) {
    as_usage([&] { cfg.classifier.validate(); });
    if (!(cfg.classification_ratio > 0.0 && cfg.classification_ratio < 1.0)) {
      throw UsageError("classification_ratio must lie in (0, 1)");
    }
  }
  const FeatureTable table = FeatureTable::load_csv(cfg.features_path());
  std::vector<EvalResult> results;
  results.reserve(combos.size());
  for (const auto& spec : combos) {
    results.push_back(
        evaluate_combination(table, spec, cfg.classifier, cfg.classification_ratio, cfg.classifier.seed));
  }
  auto out = create(cfg.predict_path(cfg.predict_mode));
  write_eval_csv(out, results);
  echo_config(cfg, "predict");
  return results;
}

void write_rank_csv(std::ostream& out, const RankSummary& summary) {
  out << "alternative,mean_rank,rank_variance\n";
  for (const auto& e : summary) {
    out << e.alternative << ',' << text::format_double(e.mean_rank) << ','
        << text::format_double(e.rank_variance) << '\n';
  }
}

void cmd_report(const PipelineConfig& cfg) {
  bool any = false;
  for (auto mode : {CombinationMode::kStandalone, CombinationMode::kMicro, CombinationMode::kMacro}) {
    const auto path = cfg.predict_path(mode);
    if (!fs::exists(path)) continue;
    std::ifstream in(path, std::ios::binary);
    const auto results = read_eval_csv(in);

    // Macro results form a single group.
    std::map<std::string, std::map<std::string, double>> by_group;
    std::set<std::string> present;
    for (const auto& r : results) {
      if (r.combo.mode != mode) throw InvalidInput(path.string() + " mixes modes");
      const std::string group = r.combo.base ? std::string(to_string(*r.combo.base)) : "all";
      by_group[group][r.combo.label()] = r.auc;
      present.insert(r.combo.label());
    }
    std::vector<std::string> alternatives;
    for (const auto& spec : all_combinations(mode)) {
      const auto label = spec.label();
      if (present.count(label) &&
          std::find(alternatives.begin(), alternatives.end(), label) == alternatives.end()) {
        alternatives.push_back(label);
      }
    }
    auto out = create(cfg.rank_path(mode));
    write_rank_csv(out, rank_performance(alternatives, by_group));
    any = true;
  }
  if (!any) throw DataError("no predict reports found in " + cfg.output_dir.string());
  echo_config(cfg, "report");
}

}  // namespace hyperlp
