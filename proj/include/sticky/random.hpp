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

#ifndef STICKY_RANDOM_HPP_
#define STICKY_RANDOM_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "sticky/hash.hpp"

namespace sticky {

// Small portable generator for experiment-level randomness (user sampling,
// subset exploration, Monte-Carlo trials). Unlike the <random> distributions,
// every derived quantity here is fully specified, so replays match across
// standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += kGoldenGamma;
    return splitmix64(state_);
  }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    // Rejection on the top of the range removes modulo bias.
    const uint64_t limit = (~uint64_t{0}) - ((~uint64_t{0}) % n);
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() >> 63) != 0; }

  double normal() { return standard_normal(next()); }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  // `count` distinct indices from [0, n), returned in ascending order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < count && i < n; ++i) {
      std::swap(all[i], all[i + below(n - i)]);
    }
    all.resize(std::min(count, n));
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  uint64_t state_;
};

}  // namespace sticky

#endif  // STICKY_RANDOM_HPP_
