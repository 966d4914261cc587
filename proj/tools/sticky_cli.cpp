//
// Copyright 2026 The stickynoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end: answer, attack, stats, experiment, uniqueness,
// generate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sticky.hpp"

namespace {

using sticky::ExperimentConfig;

// --config file first, then each --set key=value in order.
ExperimentConfig build_config(const std::string& path, const std::vector<std::string>& sets) {
  ExperimentConfig cfg = path.empty() ? ExperimentConfig{} : ExperimentConfig::from_file(path);
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw sticky::InvalidArgument("--set expects key=value: " + kv);
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

// "2..6" or "2,4,8".
std::vector<std::size_t> parse_k_list(const std::string& text) {
  std::vector<std::size_t> out;
  auto num = [&](const std::string& s) {
    auto v = sticky::parse_integer(s);
    if (!v || *v < 1) throw sticky::InvalidArgument("bad k value '" + s + "'");
    return static_cast<std::size_t>(*v);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo > hi) throw sticky::InvalidArgument("empty k range '" + text + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(num(item));
  if (out.empty()) throw sticky::InvalidArgument("empty k list");
  return out;
}

// A generator name selects that generator; anything else is a CSV path.
void apply_dataset(ExperimentConfig& cfg, const std::string& dataset, const std::string& secret) {
  if (dataset == "adult_like" || dataset == "complete_k" || dataset == "cdr_standin") {
    cfg.dataset = dataset;
  } else if (!dataset.empty()) {
    cfg.dataset = "csv";
    cfg.csv_path = dataset;
  }
  if (!secret.empty()) cfg.secret_column = secret;
}

void ensure_dir(const std::string& dir) { std::filesystem::create_directories(dir); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sticky::Error("cannot write '" + path + "'");
  out << text;
}

void add_config_options(CLI::App* app, std::string& path, std::vector<std::string>& sets) {
  app->add_option("--config", path, "key=value experiment config file")->check(CLI::ExistingFile);
  app->add_option("--set", sets, "override one config key (key=value), repeatable");
}

int print_checks(const std::vector<sticky::ThresholdCheck>& checks) {
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += !c.ok;
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sticky-noise count-query engine and attack harness"};
  app.require_subcommand(1);

  // answer
  std::string a_config, a_sql;
  std::vector<std::string> a_sets;
  bool a_debug = false;
  auto* answer = app.add_subcommand("answer", "Answer one count query through the engine");
  add_config_options(answer, a_config, a_sets);
  answer->add_option("--query", a_sql, "SELECT COUNT(*) FROM t WHERE ...")->required();
  answer->add_flag("--debug", a_debug, "print the noise layers");
  std::string a_dataset, a_salt, a_secret;
  answer->add_option("--dataset", a_dataset,
                     "adult_like | complete_k | cdr_standin, or a CSV path");
  answer->add_option("--secret", a_secret, "secret column (required for CSV input)");
  answer->add_option("--salt", a_salt, "engine salt (hex)");

  // attack
  std::string k_config, k_kind, k_dataset, k_salt, k_victim, k_known, k_secret;
  std::vector<std::string> k_sets;
  std::size_t k_delta = 0;
  double k_sigma = -1;
  uint64_t k_seed = 0;
  auto* attack = app.add_subcommand("attack", "Attack a single user");
  add_config_options(attack, k_config, k_sets);
  attack->add_option("kind", k_kind, "differential | full_differential | cloning | greedy | double")
      ->required()
      ->check(CLI::IsMember({"differential", "full_differential", "cloning", "greedy", "double"}));
  attack->add_option("--dataset", k_dataset,
                     "adult_like | complete_k | cdr_standin, or a CSV path");
  attack->add_option("--salt", k_salt, "engine salt (hex)");
  attack->add_option("--victim", k_victim, "victim uid")->required();
  attack->add_option("--known", k_known, "comma-separated known attributes (default: all)");
  attack->add_option("--secret", k_secret, "secret column (required for CSV input)");
  attack->add_option("--delta", k_delta, "dummy conditions |Delta|");
  attack->add_option("--sigma-star", k_sigma, "variance threshold");
  attack->add_option("--seed", k_seed, "subset exploration seed");

  // stats
  auto* stats = app.add_subcommand("stats", "Likelihood-ratio and calibration statistics");
  stats->require_subcommand(1);
  int s_k = 5;
  std::size_t s_trials = 100000;
  uint64_t s_seed = 1;
  auto* accuracy = stats->add_subcommand("accuracy", "Monte Carlo accuracy of the LRT");
  accuracy->add_option("--k", s_k, "attributes in the unique set")->check(CLI::Range(1, 64));
  accuracy->add_option("--trials", s_trials, "Monte Carlo trials");
  accuracy->add_option("--seed", s_seed, "seed");
  int c_delta = 10, c_k = 1, c_count = 10;
  double c_max = 3.0;
  std::string c_model = "independent";
  std::size_t c_trials = 20000;
  auto* calibrate = stats->add_subcommand("calibrate", "TPR/TNR table over sigma*");
  calibrate->add_option("--delta", c_delta, "dummy conditions |Delta|");
  calibrate->add_option("--k", c_k, "pinned conditions");
  calibrate->add_option("--count", c_count, "true query-set size");
  calibrate->add_option("--trials", c_trials, "trials per truth");
  calibrate->add_option("--max-sigma", c_max, "largest threshold");
  calibrate->add_option("--model", c_model, "independent | shared")
      ->check(CLI::IsMember({"independent", "shared"}));
  calibrate->add_option("--seed", s_seed, "seed");

  // experiment
  std::string e_config, e_out = "out", e_k;
  std::vector<std::string> e_sets;
  bool e_assert = false;
  auto* experiment = app.add_subcommand("experiment", "Run an attack over sampled users");
  add_config_options(experiment, e_config, e_sets);
  experiment->add_option("--out", e_out, "output directory");
  experiment->add_flag("--assert", e_assert, "exit nonzero on a threshold violation");
  auto* sweep = experiment->add_subcommand("sweep", "One experiment per k");
  add_config_options(sweep, e_config, e_sets);
  sweep->add_option("--k", e_k, "k range (2..6) or list (2,4,6)")->required();
  sweep->add_option("--out", e_out, "output directory");
  auto* randomized = experiment->add_subcommand("randomized", "Original vs secret-randomized");
  add_config_options(randomized, e_config, e_sets);
  randomized->add_option("--out", e_out, "output directory");

  // uniqueness
  std::string u_config, u_out, u_k = "1..10";
  std::vector<std::string> u_sets;
  std::size_t u_samples = 1000;
  uint64_t u_seed = 1;
  auto* uniqueness = app.add_subcommand("uniqueness", "Unique / value-unique fractions per k");
  add_config_options(uniqueness, u_config, u_sets);
  std::string u_dataset;
  uniqueness->add_option("--dataset", u_dataset,
                         "adult_like | complete_k | cdr_standin, or a CSV path");
  std::string u_secret;
  uniqueness->add_option("--secret", u_secret, "secret column (required for CSV input)");
  uniqueness->add_option("--k", u_k, "k range or list");
  uniqueness->add_option("--samples", u_samples, "sampled users per k");
  uniqueness->add_option("--seed", u_seed, "seed");
  uniqueness->add_option("--out", u_out, "output CSV (default stdout)");

  // generate
  std::string g_config, g_out;
  std::vector<std::string> g_sets;
  auto* generate = app.add_subcommand("generate", "Write the configured dataset as CSV");
  add_config_options(generate, g_config, g_sets);
  generate->add_option("--out", g_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error exits 2.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (answer->parsed()) {
      auto cfg = build_config(a_config, a_sets);
      apply_dataset(cfg, a_dataset, a_secret);
      if (!a_salt.empty()) cfg.engine.salt = sticky::parse_hex64(a_salt);
      const auto ds = sticky::load_dataset(cfg);
      const auto q = sticky::parse_query(a_sql);
      const auto r =
          a_debug ? sticky::answer_debug(ds, q, cfg.engine) : sticky::answer(ds, q, cfg.engine);
      nlohmann::ordered_json j;
      j["query"] = sticky::render_sql(q);
      j["value"] = r.value;
      j["suppressed"] = r.suppressed;
      if (r.layers) {
        j["true_count"] = r.layers->true_count;
        j["threshold"] = r.layers->threshold;
        j["unrounded"] = r.layers->unrounded;
        j["conditions"] = r.layers->canonical;
        j["static_layers"] = r.layers->static_layers;
        j["dynamic_layers"] = r.layers->dynamic_layers;
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (attack->parsed()) {
      auto cfg = build_config(k_config, k_sets);
      apply_dataset(cfg, k_dataset, k_secret);
      cfg.attack = sticky::parse_attack_kind(k_kind);
      if (!k_salt.empty()) cfg.engine.salt = sticky::parse_hex64(k_salt);
      if (attack->count("--delta")) cfg.delta = k_delta;
      if (attack->count("--sigma-star")) cfg.sigma_star = k_sigma;
      if (attack->count("--seed")) cfg.seed = k_seed;
      const auto ds = sticky::load_dataset(cfg);
      if (!k_secret.empty() && sticky::lowercase(k_secret) != ds.secret()) {
        throw sticky::InvalidArgument("dataset secret is '" + ds.secret() + "', not '" + k_secret +
                                      "'");
      }
      const auto row = ds.row_of(k_victim);
      if (!row) throw sticky::InvalidArgument("unknown uid '" + k_victim + "'");
      std::vector<std::string> known;
      if (k_known.empty()) {
        known = ds.non_secret_attributes();
      } else {
        std::stringstream ss(k_known);
        for (std::string a; std::getline(ss, a, ',');) known.push_back(sticky::lowercase(a));
      }
      sticky::Restricted values;
      for (const auto& a : known) values.emplace(a, ds.value(*row, ds.require_attribute(a)));
      sticky::EngineInterface engine(ds, cfg.engine);
      const sticky::UniqueOracle oracle = [&](const std::vector<std::string>& attrs) {
        return sticky::is_unique(ds, *row, attrs);
      };
      const auto o = sticky::harness_internal::attack_user(cfg, engine, sticky::schema_of(ds),
                                                           known, values, oracle, cfg.seed);
      nlohmann::ordered_json j;
      j["victim"] = k_victim;
      j["attack"] = sticky::to_string(cfg.attack);
      j["verdict"] = sticky::to_string(o.verdict);
      j["inferred"] = o.inferred ? nlohmann::ordered_json(*o.inferred) : nullptr;
      j["truth"] = ds.secret_value(*row);
      j["queries_issued"] = o.queries_issued;
      if (o.subset) {
        j["subset_used"]["attrs"] = o.subset->attrs;
        j["subset_used"]["u"] = o.subset->u ? nlohmann::ordered_json(*o.subset->u) : nullptr;
      } else {
        j["subset_used"] = nullptr;
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (accuracy->parsed()) {
      const auto mc = sticky::theoretical_accuracy(s_k, s_trials, s_seed);
      const auto fact = sticky::fact_accuracy(s_k, s_trials, s_seed);
      const auto rnd = sticky::simulated_rounded_accuracy(s_k, s_trials, s_seed);
      nlohmann::ordered_json j;
      j["k"] = s_k;
      j["trials"] = s_trials;
      j["accuracy"] = mc.accuracy;
      j["std_error"] = mc.std_error;
      j["fact_accuracy"] = fact.accuracy;
      j["rounded_accuracy"] = rnd.accuracy;
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (calibrate->parsed()) {
      const auto model = c_model == "shared" ? sticky::CalibrationModel::kSharedQuerySet
                                             : sticky::CalibrationModel::kIndependent;
      std::cout << "sigma_star,tpr,tnr,accuracy\n";
      for (const auto& r :
           sticky::calibrate_sigma_star(c_delta, c_k, c_count, c_trials, s_seed, model, c_max)) {
        std::cout << nlohmann::json(r.sigma_star).dump() << ',' << nlohmann::json(r.tpr).dump()
                  << ',' << nlohmann::json(r.tnr).dump() << ',' << nlohmann::json(r.accuracy).dump()
                  << '\n';
      }
      return 0;
    }

    if (sweep->parsed()) {
      const auto cfg = build_config(e_config, e_sets);
      const auto ks = parse_k_list(e_k);
      const auto reports = sticky::sweep_k(cfg, ks);
      ensure_dir(e_out);
      for (std::size_t i = 0; i < ks.size(); ++i) {
        sticky::write_report(reports[i], e_out, "k" + std::to_string(ks[i]));
      }
      write_text(e_out + "/sweep.csv", sticky::sweep_csv(ks, reports));
      std::cout << sticky::sweep_csv(ks, reports);
      return 0;
    }

    if (randomized->parsed()) {
      const auto cfg = build_config(e_config, e_sets);
      const auto paired = sticky::randomized_control(cfg);
      ensure_dir(e_out);
      sticky::write_report(paired.original, e_out, "original");
      sticky::write_report(paired.randomized, e_out, "randomized");
      nlohmann::ordered_json j;
      j["original"] = sticky::aggregates_to_json(paired.original.aggregates);
      j["randomized"] = sticky::aggregates_to_json(paired.randomized.aggregates);
      j["randomized_secret_mean"] = paired.randomized_secret_mean;
      j["acc_pvu_gap"] = paired.original.aggregates.acc_pvu - paired.randomized.aggregates.acc_pvu;
      write_text(e_out + "/paired.json", j.dump(2) + "\n");
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (experiment->parsed()) {
      const auto cfg = build_config(e_config, e_sets);
      const auto report = sticky::run_experiment(cfg);
      ensure_dir(e_out);
      sticky::write_report(report, e_out);
      std::cout << report.aggregates_json().dump(2) << '\n';
      if (e_assert && print_checks(sticky::threshold_checks(cfg, report)) > 0) return 1;
      return 0;
    }

    if (uniqueness->parsed()) {
      auto cfg = build_config(u_config, u_sets);
      apply_dataset(cfg, u_dataset, u_secret);
      const auto ds = sticky::load_dataset(cfg);
      const auto csv = sticky::uniqueness_report(ds, parse_k_list(u_k), u_samples, u_seed);
      if (u_out.empty()) {
        std::cout << csv;
      } else {
        write_text(u_out, csv);
      }
      return 0;
    }

    if (generate->parsed()) {
      const auto cfg = build_config(g_config, g_sets);
      const auto ds = sticky::load_dataset(cfg);
      std::ofstream out(g_out, std::ios::binary);
      if (!out) throw sticky::Error("cannot write '" + g_out + "'");
      sticky::write_csv(ds, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
