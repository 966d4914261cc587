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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every tolerance is a named constant below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sticky.hpp"

namespace sticky {
namespace {

// 1. Stickiness.
constexpr int kStickyRepeats = 100;
// 2. Noise law.
constexpr int kNoiseQueries = 10000;
constexpr double kNoiseMeanTol = 0.05;
constexpr double kNoiseVarRelTol = 0.05;
// 3. Theoretical accuracy.
constexpr std::size_t kAccuracyTrials = 100000;
constexpr double kAccuracyK5 = 0.894;
constexpr double kAccuracyK5Tol = 0.015;
constexpr double kAccuracyK2Min = 0.66;
// 4. Differential attack on Complete_5.
constexpr double kDifferentialMin = 0.85;
// 5. Unrounded cloning soundness.
constexpr std::size_t kSoundnessVictims = 500;
// 6. Cloning on adult-like data.
constexpr double kValueUnique = 0.93;
constexpr double kValueUniqueTol = 0.03;
constexpr double kAttackableAmongVuMin = 0.90;
constexpr double kCloningAccMin = 0.90;
// 7. Calibration.
constexpr std::size_t kCalibrationTrials = 20000;
constexpr double kRateMin = 0.97;
constexpr double kPlateauTol = 0.02;
// 8. Greedy.
constexpr std::size_t kGreedyBudget = 32;
constexpr double kGreedyAttackableLo = 0.45;
constexpr double kGreedyAttackableHi = 0.65;
constexpr double kGreedyAccMin = 0.88;
// 10. Randomized control.
constexpr double kRandomizedGapMax = 0.05;

struct Outcome {
  bool ok;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const char* kAdult =
    "dataset = adult_like\nadult_rows = 30162\ndataset_seed = 42\nk_star = 10\nusers = 1000\n"
    "delta = 10\nsigma_star = 0.7\niterations = 100\ntarget_value = 1\nsalt = 0x5eed0001\n"
    "seed = 1\n";

ExperimentConfig adult(AttackKind kind) {
  ExperimentConfig cfg = ExperimentConfig::from_text(kAdult);
  cfg.attack = kind;
  return cfg;
}

Outcome stickiness() {
  const Dataset ds = generate_adult_like({2000, 3});
  EngineConfig cfg;
  cfg.salt = 0x51;
  const std::vector<std::string> sql = {
      "SELECT COUNT(*) FROM t WHERE age = 37",
      "SELECT COUNT(*) FROM t WHERE age >= 30 AND sex = 'Female' AND salary = 1",
      "SELECT COUNT(*) FROM t WHERE occupation IN ('Sales', 'Tech-support') AND age <> 40",
      "SELECT COUNT(*) FROM t WHERE hours_per_week < 35 AND race = 'White' AND salary <> 1"};
  double worst = 0;
  for (const auto& s : sql) {
    const Query q = parse_query(s);
    std::vector<double> xs;
    for (int i = 0; i < kStickyRepeats; ++i) xs.push_back(answer(ds, q, cfg).value);
    worst = std::max(worst, sample_variance(xs));
  }
  return {worst == 0, "max sample variance over " + std::to_string(sql.size()) + "x" +
                          std::to_string(kStickyRepeats) + " repeats = " + fmt("%g", worst)};
}

Outcome noise_law() {
  // Six wide integer columns; conditions "c_l <> v" with fresh v keep almost
  // every row, so each query brings new static and dynamic layers.
  constexpr std::size_t kRows = 20000;
  Rng rng(2024);
  std::vector<std::string> attrs, uids(kRows);
  std::vector<ColumnData> cols;
  for (int l = 1; l <= 6; ++l) {
    attrs.push_back("c" + std::to_string(l));
    std::vector<int64_t> col(kRows);
    for (auto& v : col) v = static_cast<int64_t>(rng.below(1000000));
    cols.emplace_back(std::move(col));
  }
  std::vector<int64_t> s(kRows);
  for (std::size_t r = 0; r < kRows; ++r) {
    s[r] = rng.coin();
    uids[r] = "n" + std::to_string(r);
  }
  attrs.push_back("s");
  cols.emplace_back(std::move(s));
  const Dataset ds = Dataset::Create(attrs, "s", uids, std::move(cols));
  EngineConfig cfg;
  cfg.salt = 0x2;
  cfg.rounding = Rounding::kNone;
  cfg.suppression = false;
  bool ok = true;
  std::string detail;
  for (int h : {1, 3, 6}) {
    double sum = 0, sq = 0;
    for (int i = 0; i < kNoiseQueries; ++i) {
      std::vector<Condition> cs;
      for (int l = 1; l <= h; ++l) {
        cs.push_back(Condition::Neq("c" + std::to_string(l), Value::Integer(1000000 + i * 7 + l)));
      }
      const auto d = answer_debug(ds, Query(std::move(cs)), cfg);
      const double e = d.value - static_cast<double>(d.layers->true_count);
      sum += e;
      sq += e * e;
    }
    const double mean = sum / kNoiseQueries;
    const double var = (sq - kNoiseQueries * mean * mean) / (kNoiseQueries - 1);
    const bool good =
        std::abs(mean) <= kNoiseMeanTol && std::abs(var / (2.0 * h) - 1) <= kNoiseVarRelTol;
    ok = ok && good;
    detail += "h=" + std::to_string(h) + " mean=" + fmt("%.4f", mean) + " var=" + fmt("%.3f", var) +
              " (want " + fmt("%.0f", 2.0 * h) + ") ";
  }
  return {ok, detail};
}

Outcome theoretical() {
  const auto k5 = theoretical_accuracy(5, kAccuracyTrials, 1);
  const auto k2 = theoretical_accuracy(2, kAccuracyTrials, 1);
  const bool ok =
      std::abs(k5.accuracy - kAccuracyK5) <= kAccuracyK5Tol && k2.accuracy >= kAccuracyK2Min;
  return {ok, "k=5 " + fmt("%.4f", k5.accuracy) + " (want 0.894 +- 0.015), k=2 " +
                  fmt("%.4f", k2.accuracy) + " (want >= 0.66)"};
}

Outcome differential() {
  const auto cfg = ExperimentConfig::from_text(
      "dataset = complete_k\ncomplete_b = 12\ncomplete_k = 5\ndataset_seed = 42\n"
      "attack = differential\nk_star = 5\nusers = 1000\nsalt = 0x5eed0002\nseed = 1\n");
  const auto r = run_experiment(cfg);
  return {r.aggregates.acc_all >= kDifferentialMin,
          "accuracy " + fmt("%.4f", r.aggregates.acc_all) + " over 1000 users (want >= 0.85)"};
}

Outcome soundness() {
  // Unrounded engine with suppression, sigma* = 0. Victims are kept only when
  // they are unique on (A', u) and none of their cloning queries is
  // suppressed.
  const Dataset ds = generate_complete_k(20, 3, 5);
  const Schema schema = schema_of(ds);
  EngineConfig cfg;
  cfg.salt = 0x5eed0005;
  cfg.rounding = Rounding::kNone;
  EngineInterface engine(ds, cfg);
  Rng rng(6);
  std::size_t used = 0, correct = 0, skipped = 0;
  for (std::size_t r : rng.sample_indices(ds.size(), ds.size())) {
    if (used == kSoundnessVictims) break;
    Restricted x;
    for (const char* a : {"a1", "a2", "a3"}) x.emplace(a, ds.value(r, ds.require_attribute(a)));
    const int v = static_cast<int>(used % 2);
    CloningSetup s{{"a1", "a2"}, "a3", x, dummies_for(schema, {"a1", "a2"}, "a3", x, 10),
                   "secret",     v};
    bool clean = true;
    for (std::size_t j = 0; j < s.delta.size() && clean; ++j) {
      for (bool with_u : {false, true}) {
        clean = clean && !answer(ds, build_cloning_query(s, j, with_u), cfg).suppressed;
      }
    }
    if (!clean) {
      ++skipped;
      continue;
    }
    ++used;
    correct += cloning_attack(engine, s, 0.0) == (ds.secret_value(r) == v);
  }
  return {used == kSoundnessVictims && correct == used,
          std::to_string(correct) + "/" + std::to_string(used) + " correct (" +
              std::to_string(skipped) + " candidates skipped for suppression)"};
}

Outcome cloning(const ExperimentReport& r) {
  const auto& a = r.aggregates;
  const bool ok = std::abs(a.value_unique_frac - kValueUnique) <= kValueUniqueTol &&
                  a.predicted_attackable_among_value_unique >= kAttackableAmongVuMin &&
                  a.acc_pvu >= kCloningAccMin;
  return {ok, "value-unique " + fmt("%.3f", a.value_unique_frac) +
                  " (want 0.93 +- 0.03), attackable among value-unique " +
                  fmt("%.3f", a.predicted_attackable_among_value_unique) +
                  " (want >= 0.90), acc_pvu " + fmt("%.4f", a.acc_pvu) + " (want >= 0.90)"};
}

Outcome calibration() {
  bool ok = true;
  std::string detail;
  for (int k : {1, 3, 5}) {
    const auto rows =
        calibrate_sigma_star(10, k, 10, kCalibrationTrials, 7, CalibrationModel::kIndependent, 1.0);
    double peak = 0, plateau = 1;
    CalibrationRow at;
    for (const auto& row : rows) {
      peak = std::max(peak, row.accuracy);
      if (std::abs(row.sigma_star - 0.7) < 1e-9) at = row;
    }
    for (const auto& row : rows) {
      if (row.sigma_star >= 0.4 - 1e-9) plateau = std::min(plateau, row.accuracy);
    }
    const bool good = at.tpr >= kRateMin && at.tnr >= kRateMin && peak - plateau <= kPlateauTol;
    ok = ok && good;
    detail += "k=" + std::to_string(k) + " tpr=" + fmt("%.4f", at.tpr) +
              " tnr=" + fmt("%.4f", at.tnr) + " plateau-drop=" + fmt("%.4f", peak - plateau) + " ";
  }
  return {ok, detail};
}

Outcome greedy(const ExperimentReport& r) {
  const auto& a = r.aggregates;
  const bool ok = a.queries_max <= kGreedyBudget &&
                  a.predicted_attackable_frac >= kGreedyAttackableLo &&
                  a.predicted_attackable_frac <= kGreedyAttackableHi && a.acc_pvu >= kGreedyAccMin;
  return {ok, "max queries " + std::to_string(a.queries_max) + " (want <= 32), attackable " +
                  fmt("%.3f", a.predicted_attackable_frac) + " (want 0.45..0.65), acc_pvu " +
                  fmt("%.4f", a.acc_pvu) + " (want >= 0.88)"};
}

Outcome double_vs_single(const ExperimentReport& single, const ExperimentReport& dbl) {
  const auto &s = single.aggregates, &d = dbl.aggregates;
  return {d.acc_pvu > s.acc_pvu && d.predicted_attackable_frac < s.predicted_attackable_frac,
          "acc_pvu " + fmt("%.4f", d.acc_pvu) + " vs " + fmt("%.4f", s.acc_pvu) + ", attackable " +
              fmt("%.3f", d.predicted_attackable_frac) + " vs " +
              fmt("%.3f", s.predicted_attackable_frac)};
}

Outcome randomized(const ExperimentReport& original, const ExperimentReport& rnd) {
  const double gap = original.aggregates.acc_pvu - rnd.aggregates.acc_pvu;
  return {std::abs(gap) <= kRandomizedGapMax,
          "acc_pvu " + fmt("%.4f", original.aggregates.acc_pvu) + " original vs " +
              fmt("%.4f", rnd.aggregates.acc_pvu) + " randomized, gap " + fmt("%.4f", gap) +
              " (want |gap| <= 0.05)"};
}

Outcome replay(const ExperimentReport& greedy_run) {
  const auto again = run_experiment(adult(AttackKind::kGreedy));
  const bool same = again.rows_csv() == greedy_run.rows_csv() &&
                    again.aggregates_json().dump() == greedy_run.aggregates_json().dump();
  const bool golden = hash64("age = 37") == 0x3d477ede9dab3574ULL &&
                      Rng(1).next() == 0x910a2dec89025cc1ULL &&
                      std::llround(standard_normal(12345) / kNoiseQuantum) == 604026504;
  return {same && golden, std::string("rerun ") + (same ? "identical" : "differs") +
                              ", golden hash/PRNG values " + (golden ? "match" : "differ")};
}

}  // namespace
}  // namespace sticky

int main() {
  using namespace sticky;
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = f();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += !o.ok;
  };
  report(1, "stickiness", stickiness);
  report(2, "noise-law", noise_law);
  report(3, "theoretical-accuracy", theoretical);
  report(4, "differential-complete5", differential);
  report(5, "unrounded-cloning-soundness", soundness);

  const ExperimentConfig ccfg = adult(AttackKind::kCloning);
  const Dataset ds = load_dataset(ccfg);
  ExperimentReport single;
  report(6, "cloning-adult", [&] {
    single = run_experiment(ccfg, ds);
    return cloning(single);
  });
  report(7, "sigma-calibration", calibration);
  ExperimentReport greedy_run;
  report(8, "greedy-budget", [&] {
    greedy_run = run_experiment(adult(AttackKind::kGreedy), ds);
    return greedy(greedy_run);
  });
  report(9, "double-vs-single",
         [&] { return double_vs_single(single, run_experiment(adult(AttackKind::kDouble), ds)); });
  report(10, "randomized-control", [&] {
    ExperimentConfig rcfg = ccfg;
    rcfg.randomize = true;
    return randomized(single, run_experiment(rcfg, randomize_secret(ds, rcfg.randomize_seed)));
  });
  report(11, "replay-determinism", [&] { return replay(greedy_run); });
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
