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

#ifndef STICKY_STATS_HPP_
#define STICKY_STATS_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sticky/error.hpp"
#include "sticky/hash.hpp"
#include "sticky/random.hpp"

namespace sticky {

// H0: sample ~ N(mu0, var0); H1: sample ~ N(mu1, var1).
struct GaussianHypothesisPair {
  double mu0 = 0;
  double var0 = 2;
  double mu1 = 1;
  double var1 = 4;

  // Differential-attack pair for k known attributes: N(0,2) vs N(1,2k+2).
  static GaussianHypothesisPair ForK(int k) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    return {0, 2, 1, 2.0 * k + 2};
  }
  // Pair for inequality-augmented samples: N(0,4) vs N(1,2k+2).
  static GaussianHypothesisPair InequalityForK(int k) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    return {0, 4, 1, 2.0 * k + 2};
  }
};

struct SampleSet {
  std::vector<double> q_samples;
  std::vector<double> r_samples;

  bool empty() const { return q_samples.empty() && r_samples.empty(); }
  std::size_t size() const { return q_samples.size() + r_samples.size(); }
};

inline double normal_log_pdf(double x, double mu, double var) {
  const double d = x - mu;
  return -0.5 * (d * d / var + std::log(2 * std::numbers::pi * var));
}

// log of prod_q f(q)/g(q) * prod_r g(r)/f(r).
inline double log_likelihood_ratio(const SampleSet& s, const GaussianHypothesisPair& h) {
  auto term = [&](double x) {
    return normal_log_pdf(x, h.mu0, h.var0) - normal_log_pdf(x, h.mu1, h.var1);
  };
  double acc = 0;
  for (double q : s.q_samples) acc += term(q);
  for (double r : s.r_samples) acc -= term(r);
  return acc;
}

// True iff Lambda >= 1 (the q samples look like N(mu0,var0)). Empty input
// yields nullopt (NoSamples).
inline std::optional<bool> lrt(const SampleSet& s, const GaussianHypothesisPair& h) {
  if (s.empty()) return std::nullopt;
  return log_likelihood_ratio(s, h) >= 0;
}

inline std::optional<bool> lrt(const SampleSet& s, int k) {
  return lrt(s, GaussianHypothesisPair::ForK(k));
}

struct AccuracyEstimate {
  double accuracy = 0;
  double std_error = 0;
  std::size_t trials = 0;
};

namespace stats_internal {

inline AccuracyEstimate finish(std::size_t correct, std::size_t trials) {
  AccuracyEstimate out;
  out.trials = trials;
  out.accuracy = static_cast<double>(correct) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.accuracy * (1 - out.accuracy) / static_cast<double>(trials));
  return out;
}

inline double rounded(double x) { return std::max(0.0, std::round(x)); }

}  // namespace stats_internal

// Monte-Carlo accuracy of the likelihood-ratio test with k samples from each
// distribution, no rounding. Trials alternate between the two truths; trial
// t draws from its own substream, so the result depends only on (k, trials,
// seed).
inline AccuracyEstimate theoretical_accuracy(int k, std::size_t trials, uint64_t seed = 1) {
  const auto h = GaussianHypothesisPair::ForK(k);
  const double sd0 = std::sqrt(h.var0), sd1 = std::sqrt(h.var1);
  std::size_t correct = 0;
  SampleSet s;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const bool h0 = t % 2 == 0;
    s.q_samples.clear();
    s.r_samples.clear();
    for (int j = 0; j < k; ++j) {
      const double a = h.mu0 + sd0 * rng.normal();
      const double b = h.mu1 + sd1 * rng.normal();
      s.q_samples.push_back(h0 ? a : b);
      s.r_samples.push_back(h0 ? b : a);
    }
    if (*lrt(s, h) == h0) ++correct;
  }
  return stats_internal::finish(correct, trials);
}

// Same quantity through the noncentral chi-squared representation:
// acc = 1 - Pr[alpha0 Z0 - alpha1 Z1 < 0], Z_i ~ chi2'(n = k, lambda_i).
inline AccuracyEstimate fact_accuracy(int k, std::size_t trials, uint64_t seed = 1) {
  const auto h = GaussianHypothesisPair::ForK(k);
  const double s0 = std::sqrt(h.var0), s1 = std::sqrt(h.var1);
  const double n = k;
  const double shift = (h.mu0 * h.var1 - h.mu1 * h.var0) / (h.var0 - h.var1);
  const double lambda[2] = {n * std::pow(h.mu0 / s0 + shift / s0, 2),
                            n * std::pow(h.mu1 / s1 + shift / s1, 2)};
  const double alpha[2] = {(h.var0 - h.var1) / (2 * h.var1), (h.var0 - h.var1) / (2 * h.var0)};
  std::size_t correct = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    double z[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
      const double m = std::sqrt(lambda[i] / n);
      for (int d = 0; d < k; ++d) {
        const double x = rng.normal() + m;
        z[i] += x * x;
      }
    }
    if (!(alpha[0] * z[0] - alpha[1] * z[1] < 0)) ++correct;
  }
  return stats_internal::finish(correct, trials);
}

// Layered simulation of the differential attack's answers with rounding to
// the nearest non-negative integer and no suppression. `base_count` is the
// true count of the query that excludes the victim.
inline AccuracyEstimate simulated_rounded_accuracy(int k, std::size_t trials, uint64_t seed = 1,
                                                   int base_count = 100) {
  using stats_internal::rounded;
  const auto h = GaussianHypothesisPair::ForK(k);
  std::size_t correct = 0;
  SampleSet s;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const bool h0 = t % 2 == 0;  // x^(s) = 1
    // Same query sets: only the extra condition's two layers survive.
    auto same = [&] {
      double shared = base_count;
      for (int i = 0; i < 2 * k; ++i) shared += rng.normal();
      const double extra = rng.normal() + rng.normal();
      return rounded(shared) - rounded(shared + extra);
    };
    // Victim in Q only: every dynamic layer differs.
    auto differ = [&] {
      double st = 0;
      for (int i = 0; i < k; ++i) st += rng.normal();
      double q = base_count + 1 + st, qp = base_count + st;
      for (int i = 0; i < k; ++i) q += rng.normal();
      for (int i = 0; i < k + 2; ++i) qp += rng.normal();
      return rounded(q) - rounded(qp);
    };
    s.q_samples.clear();
    s.r_samples.clear();
    for (int j = 0; j < k; ++j) {
      s.q_samples.push_back(h0 ? same() : differ());
      s.r_samples.push_back(h0 ? differ() : same());
    }
    if (*lrt(s, h) == h0) ++correct;
  }
  return stats_internal::finish(correct, trials);
}

// Unbiased sample variance (two-pass).
inline double sample_variance(std::span<const double> values) {
  if (values.size() < 2) throw InvalidArgument("sample variance needs at least two values");
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

// How the dynamic layers of the cloning queries are simulated when the
// victim's secret differs from the probed value.
enum class CalibrationModel {
  // Each answer carries fresh dynamic layers (samples assumed independent).
  kIndependent,
  // Dynamic layers are shared by all queries with the same query set, as in
  // the engine: the Q_j share one set, the Q'_j another.
  kSharedQuerySet,
};

// Sample variances of simulated q-vectors, per truth.
struct CalibrationSamples {
  std::vector<double> equal;   // x^(s) = v
  std::vector<double> differ;  // x^(s) != v
};

// Simulates `trials` rounded answer sets per truth for |Delta| = delta dummy
// conditions, k pinned conditions and Q_j(D) = true_count.
inline CalibrationSamples simulate_cloning_variances(
    int delta, int k, int true_count, std::size_t trials, uint64_t seed = 1,
    CalibrationModel model = CalibrationModel::kIndependent) {
  if (delta < 2) throw InvalidArgument("delta must be at least 2");
  if (k < 1) throw InvalidArgument("k must be at least 1");
  using stats_internal::rounded;
  CalibrationSamples out;
  std::vector<double> s_delta(delta), d_delta(delta), d_delta2(delta), q(delta);
  for (int truth = 0; truth < 2; ++truth) {
    const bool equal = truth == 0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(derive_seed(seed, static_cast<uint64_t>(truth)), t));
      for (auto& x : s_delta) x = rng.normal();
      for (auto& x : d_delta) x = rng.normal();
      for (auto& x : d_delta2) x = rng.normal();
      double s_pin = 0, d_pin = 0, d_pin2 = 0;
      for (int i = 0; i < k; ++i) {
        s_pin += rng.normal();
        d_pin += rng.normal();
        d_pin2 += rng.normal();
      }
      const double s_u = rng.normal(), d_u = rng.normal();
      double s_all = 0, d_all = 0, d_all2 = 0;
      for (int l = 0; l < delta; ++l) {
        s_all += s_delta[l];
        d_all += d_delta[l];
        d_all2 += d_delta2[l];
      }
      for (int j = 0; j < delta; ++j) {
        const double base = true_count + (s_all - s_delta[j]) + s_pin;
        double a, b;
        if (equal) {
          a = base + (d_all - d_delta[j]) + d_pin;
          b = a + s_u + d_u;
        } else if (model == CalibrationModel::kSharedQuerySet) {
          a = base + (d_all - d_delta[j]) + d_pin;
          b = base - 1 + (d_all2 - d_delta2[j]) + d_pin2 + s_u + d_u;
        } else {
          a = base;
          b = base - 1 + s_u;
          for (int i = 0; i < delta - 1 + k; ++i) a += rng.normal();
          for (int i = 0; i < delta + k; ++i) b += rng.normal();
        }
        q[j] = rounded(a) - rounded(b);
      }
      (equal ? out.equal : out.differ).push_back(sample_variance(q));
    }
  }
  return out;
}

struct CalibrationRow {
  double sigma_star = 0;
  double tpr = 0;  // Pr[S^2 <= sigma* | x = v]
  double tnr = 0;  // Pr[S^2 >  sigma* | x != v]
  double accuracy = 0;
};

inline CalibrationRow classify_rates(const CalibrationSamples& s, double sigma_star) {
  CalibrationRow row;
  row.sigma_star = sigma_star;
  std::size_t tp = 0, tn = 0;
  for (double v : s.equal) tp += v <= sigma_star;
  for (double v : s.differ) tn += v > sigma_star;
  row.tpr = static_cast<double>(tp) / static_cast<double>(s.equal.size());
  row.tnr = static_cast<double>(tn) / static_cast<double>(s.differ.size());
  row.accuracy = 0.5 * (row.tpr + row.tnr);
  return row;
}

// TPR/TNR table for sigma* = 0, 0.05, ..., max_sigma.
inline std::vector<CalibrationRow> calibrate_sigma_star(
    int delta, int k, int true_count, std::size_t trials, uint64_t seed = 1,
    CalibrationModel model = CalibrationModel::kIndependent, double max_sigma = 3.0) {
  const auto samples = simulate_cloning_variances(delta, k, true_count, trials, seed, model);
  std::vector<CalibrationRow> rows;
  for (int i = 0; i / 20.0 <= max_sigma + 1e-9; ++i) {
    rows.push_back(classify_rates(samples, i / 20.0));
  }
  return rows;
}

}  // namespace sticky

#endif  // STICKY_STATS_HPP_
