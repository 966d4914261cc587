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

#include "sticky/hash.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "sticky/bitset.hpp"
#include "sticky/random.hpp"

namespace sticky {
namespace {

TEST(Hash64Test, GoldenValues) {
  EXPECT_EQ(hash64(""), 0xefd01f60ba992926ULL);
  EXPECT_EQ(hash64("a"), 0x82a2a958a9bece5bULL);
  EXPECT_EQ(hash64("age = 37"), 0x3d477ede9dab3574ULL);
  EXPECT_EQ(hash64("age = 38"), 0x148bb9681b37283aULL);
  EXPECT_EQ(hash64("age <> 37"), 0x249f6b9e878c7796ULL);
}

TEST(Hash64Test, IsConstexpr) {
  static_assert(hash64("age = 37") == 0x3d477ede9dab3574ULL);
  static_assert(fmix64(0) == 0);
}

TEST(SplitMixTest, ReferenceStream) {
  // First output of the reference SplitMix64 generator seeded with 0.
  Rng zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
  Rng one(1);
  EXPECT_EQ(one.next(), 0x910a2dec89025cc1ULL);
  EXPECT_EQ(one.next(), 0xbeeb8da1658eec67ULL);
  EXPECT_EQ(one.next(), 0xf893a2eefb32555eULL);
}

TEST(SplitMixTest, StreamAndDerivedSeeds) {
  EXPECT_EQ(stream_at(5, 0), 0x63033b0ca389c35aULL);
  EXPECT_EQ(derive_seed(7, 11), 0x0a56ecdd86701411ULL);
  EXPECT_NE(derive_seed(7, 11), derive_seed(7, 12));
  EXPECT_NE(derive_seed(7, 11), derive_seed(8, 11));
}

TEST(GaussianTest, GoldenDeviates) {
  // In units of kNoiseQuantum.
  EXPECT_EQ(standard_normal(0), -486144922 * kNoiseQuantum);
  EXPECT_EQ(standard_normal(1), -30332934 * kNoiseQuantum);
  EXPECT_EQ(standard_normal(2), -5881774 * kNoiseQuantum);
  EXPECT_EQ(standard_normal(12345), 604026504 * kNoiseQuantum);
  EXPECT_EQ(standard_normal(0xdeadbeef), 1141216454 * kNoiseQuantum);
}

TEST(GaussianTest, QuantizedToGrid) {
  for (uint64_t s = 0; s < 1000; ++s) {
    const double z = standard_normal(s);
    EXPECT_EQ(z / kNoiseQuantum, std::nearbyint(z / kNoiseQuantum));
  }
}

TEST(GaussianTest, ZeroSdReturnsMean) { EXPECT_EQ(gaussian(99, 3.5, 0.0), 3.5); }

TEST(GaussianTest, MonteCarloMoments) {
  const int n = 200000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double z = gaussian(derive_seed(3, static_cast<uint64_t>(i)), 2.0, 3.0);
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  // 5 standard errors.
  EXPECT_NEAR(mean, 2.0, 5 * 3.0 / std::sqrt(n));
  EXPECT_NEAR(var, 9.0, 5 * 9.0 * std::sqrt(2.0 / n));
}

TEST(RngTest, BelowIsInRangeAndCoversIt) {
  Rng rng(4);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, UnitInHalfOpenInterval) {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, SampleIndicesDistinctSorted) {
  Rng rng(6);
  const auto s = rng.sample_indices(50, 20);
  ASSERT_EQ(s.size(), 20u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 20u);
  EXPECT_EQ(rng.sample_indices(5, 9).size(), 5u);
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(8);
  std::vector<int> v = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  rng.shuffle(std::span(v));
  std::multiset<int> m(v.begin(), v.end());
  EXPECT_EQ(m, (std::multiset<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(RowBitsetTest, SetOperations) {
  RowBitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  EXPECT_EQ(a.count(), 3u);
  RowBitset c = a;
  c &= b;
  EXPECT_EQ(c.count(), 1u);
  EXPECT_TRUE(c.test(64));
  c = a;
  c |= b;
  EXPECT_EQ(c.count(), 4u);
  c = a;
  c.and_not(b);
  EXPECT_EQ(c.count(), 2u);
  std::vector<std::size_t> rows;
  c.for_each([&](std::size_t r) { rows.push_back(r); });
  EXPECT_EQ(rows, (std::vector<std::size_t>{0, 129}));
}

}  // namespace
}  // namespace sticky
