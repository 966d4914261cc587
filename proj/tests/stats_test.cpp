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

#include "sticky/stats.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "sticky/error.hpp"

namespace sticky {
namespace {

TEST(LrtTest, HandComputedRatio) {
  // k = 1: N(0,2) vs N(1,4). log f(0)/g(0) = (1/4 + ln 2)/2 and
  // log f(1)/g(1) = (ln 2 - 1/2)/2, so their difference is 3/8.
  const SampleSet s{{0.0}, {1.0}};
  EXPECT_NEAR(log_likelihood_ratio(s, GaussianHypothesisPair::ForK(1)), 0.375, 1e-12);
  EXPECT_EQ(lrt(s, 1), std::optional<bool>(true));
  const SampleSet swapped{{1.0}, {0.0}};
  EXPECT_NEAR(log_likelihood_ratio(swapped, GaussianHypothesisPair::ForK(1)), -0.375, 1e-12);
  EXPECT_EQ(lrt(swapped, 1), std::optional<bool>(false));
}

TEST(LrtTest, OneSidedAndEmptySamples) {
  EXPECT_EQ(lrt(SampleSet{}, 2), std::nullopt);
  EXPECT_EQ(lrt(SampleSet{{0.1, -0.2}, {}}, 2), std::optional<bool>(true));
  EXPECT_EQ(lrt(SampleSet{{}, {0.1, -0.2}}, 2), std::optional<bool>(false));
  EXPECT_EQ(lrt(SampleSet{{6.0}, {}}, 2), std::optional<bool>(false));
}

TEST(LrtTest, HypothesisPairs) {
  const auto p = GaussianHypothesisPair::ForK(4);
  EXPECT_EQ(p.var0, 2.0);
  EXPECT_EQ(p.var1, 10.0);
  EXPECT_EQ(GaussianHypothesisPair::InequalityForK(4).var0, 4.0);
  EXPECT_THROW(GaussianHypothesisPair::ForK(0), InvalidArgument);
  EXPECT_THROW(lrt(SampleSet{{0.0}, {}}, 0), InvalidArgument);
}

TEST(AccuracyTest, TheoreticalMatchesReference) {
  // Independent 400k-trial reference estimates.
  const std::array<double, 6> want = {0.674, 0.792, 0.882, 0.939, 0.971, 0.987};
  for (int k = 1; k <= 6; ++k) {
    const auto est = theoretical_accuracy(k, 100000, 7);
    EXPECT_NEAR(est.accuracy, want[k - 1], 0.006) << "k=" << k;
    EXPECT_EQ(est.trials, 100000u);
    EXPECT_GT(est.std_error, 0.0);
  }
}

TEST(AccuracyTest, ChiSquaredFormAgrees) {
  for (int k : {1, 2, 5}) {
    const auto mc = theoretical_accuracy(k, 100000, 3);
    const auto fact = fact_accuracy(k, 100000, 4);
    const double se = std::hypot(mc.std_error, fact.std_error);
    EXPECT_NEAR(mc.accuracy, fact.accuracy, 5 * se + 1e-3) << "k=" << k;
  }
}

TEST(AccuracyTest, Deterministic) {
  EXPECT_EQ(theoretical_accuracy(3, 5000, 11).accuracy, theoretical_accuracy(3, 5000, 11).accuracy);
  EXPECT_EQ(simulated_rounded_accuracy(3, 5000, 11).accuracy,
            simulated_rounded_accuracy(3, 5000, 11).accuracy);
}

TEST(AccuracyTest, RoundingCostsLittle) {
  for (int k : {2, 5}) {
    const double exact = theoretical_accuracy(k, 50000, 5).accuracy;
    const double rounded = simulated_rounded_accuracy(k, 50000, 6).accuracy;
    EXPECT_GT(rounded, 0.5);
    EXPECT_LT(rounded, exact + 0.01) << "k=" << k;
    EXPECT_GT(rounded, exact - 0.08) << "k=" << k;
  }
}

TEST(SampleVarianceTest, Examples) {
  const std::vector<double> a = {1, 2, 3, 4};
  EXPECT_NEAR(sample_variance(a), 5.0 / 3.0, 1e-15);
  const std::vector<double> b = {2, 2};
  EXPECT_EQ(sample_variance(b), 0.0);
  const std::vector<double> c = {1e9 + 1, 1e9 + 2, 1e9 + 3};
  EXPECT_NEAR(sample_variance(c), 1.0, 1e-6);
}

TEST(SampleVarianceTest, NeedsTwoValues) {
  const std::vector<double> one = {3};
  EXPECT_THROW(sample_variance(one), InvalidArgument);
  EXPECT_THROW(sample_variance(std::vector<double>{}), InvalidArgument);
}

TEST(CalibrationTest, IndependentModelMatchesReference) {
  // Reference at |Delta| = 10, count 10, sigma* = 0.7: TPR ~0.994, TNR ~1.0.
  const auto rows = calibrate_sigma_star(10, 3, 10, 3000, 1);
  ASSERT_EQ(rows.size(), 61u);
  EXPECT_DOUBLE_EQ(rows[14].sigma_star, 0.7);
  EXPECT_NEAR(rows[14].tpr, 0.994, 0.01);
  EXPECT_GE(rows[14].tnr, 0.99);
  EXPECT_NEAR(rows[14].accuracy, 0.5 * (rows[14].tpr + rows[14].tnr), 1e-15);
}

TEST(CalibrationTest, RatesAreMonotone) {
  const auto rows =
      calibrate_sigma_star(10, 2, 10, 1000, 2, CalibrationModel::kSharedQuerySet, 2.0);
  ASSERT_EQ(rows.size(), 41u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].tpr, rows[i - 1].tpr);
    EXPECT_LE(rows[i].tnr, rows[i - 1].tnr);
  }
  EXPECT_EQ(rows.front().sigma_star, 0.0);
}

TEST(CalibrationTest, SampleCounts) {
  const auto s = simulate_cloning_variances(4, 1, 10, 25, 9);
  EXPECT_EQ(s.equal.size(), 25u);
  EXPECT_EQ(s.differ.size(), 25u);
  EXPECT_THROW(simulate_cloning_variances(1, 1, 10, 5), InvalidArgument);
  EXPECT_THROW(simulate_cloning_variances(4, 0, 10, 5), InvalidArgument);
}

}  // namespace
}  // namespace sticky
