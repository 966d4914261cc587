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

#ifndef STICKY_HASH_HPP_
#define STICKY_HASH_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace sticky {

inline constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// MurmurHash3 fmix64 finalizer: a bijective 64-bit avalanche mix.
constexpr uint64_t fmix64(uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

// SplitMix64 output function (Steele, Lea, Flood).
constexpr uint64_t splitmix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// 64-bit FNV-1a over the bytes of `text`, finished with fmix64.
// Frozen: changing it changes every noise value the engine produces.
constexpr uint64_t hash64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return fmix64(h);
}

// The i-th output of the counter-based stream keyed by `seed`.
constexpr uint64_t stream_at(uint64_t seed, uint64_t i) {
  return splitmix64(seed + (i + 1) * kGoldenGamma);
}

// Derives an independent key from (seed, a) for sub-streams.
constexpr uint64_t derive_seed(uint64_t seed, uint64_t a) {
  return splitmix64(seed ^ splitmix64(a + kGoldenGamma));
}

// Normal deviates are snapped to this grid so that sums of a few dozen noise
// layers plus an integer count are exact in double precision.
inline constexpr double kNoiseQuantum = 1.0 / (1 << 30);

// Deterministic standard-normal deviate for `seed`: Box-Muller on the first
// two outputs of the seed's stream, rounded to kNoiseQuantum.
inline double standard_normal(uint64_t seed) {
  const double u1 = static_cast<double>((stream_at(seed, 0) >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(stream_at(seed, 1) >> 11) * 0x1.0p-53;        // [0, 1)
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return std::nearbyint(z / kNoiseQuantum) * kNoiseQuantum;
}

// mean + sd * standard_normal(seed). sd == 0 returns mean exactly.
inline double gaussian(uint64_t seed, double mean, double sd) {
  if (sd == 0.0) return mean;
  return mean + sd * standard_normal(seed);
}

}  // namespace sticky

#endif  // STICKY_HASH_HPP_
