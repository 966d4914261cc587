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

#ifndef STICKY_ENGINE_HPP_
#define STICKY_ENGINE_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sticky/dataset.hpp"
#include "sticky/evaluate.hpp"
#include "sticky/hash.hpp"
#include "sticky/query.hpp"

namespace sticky {

enum class Rounding { kNone, kNearestNonNegative };

struct EngineConfig {
  uint64_t salt = 0;
  Rounding rounding = Rounding::kNearestNonNegative;
  bool suppression = true;
  int64_t hard_floor = 2;
  double threshold_mean = 4.0;
  double threshold_sd = std::sqrt(0.5);

  void validate() const {
    if (!(threshold_sd > 0)) throw InvalidArgument("threshold_sd must be positive");
    if (hard_floor < 0) throw InvalidArgument("hard_floor must be non-negative");
  }
};

// Per-condition noise breakdown, in query condition order.
struct NoiseLayers {
  std::vector<std::string> canonical;
  std::vector<double> static_layers;
  std::vector<double> dynamic_layers;
  std::size_t true_count = 0;
  double threshold = 0;
  double unrounded = 0;
};

struct NoisyAnswer {
  double value = 0;
  bool suppressed = false;
  std::optional<NoiseLayers> layers;
};

inline uint64_t static_seed(const Condition& c, const EngineConfig& cfg) {
  return hash64(canonical_string(c)) ^ cfg.salt;
}

// XOR of hash64(uid) over a set of uids.
inline uint64_t uid_set_hash(const std::vector<std::string>& uids) {
  uint64_t h = 0;
  for (const auto& u : uids) h ^= hash64(u);
  return h;
}

inline uint64_t uid_set_hash(const Dataset& ds, const std::vector<uint32_t>& rows) {
  uint64_t h = 0;
  for (uint32_t r : rows) h ^= ds.uid_hash(r);
  return h;
}

inline uint64_t dynamic_seed(const Condition& c, const std::vector<std::string>& query_set,
                             const EngineConfig& cfg) {
  return static_seed(c, cfg) ^ uid_set_hash(query_set);
}

inline uint64_t threshold_seed(const std::vector<std::string>& query_set, const EngineConfig& cfg) {
  return cfg.salt ^ uid_set_hash(query_set);
}

namespace engine_internal {

inline NoisyAnswer run(const Dataset& ds, const Query& q, const EngineConfig& cfg, bool debug) {
  const EvalResult r = evaluate(ds, q);
  const uint64_t set_hash = uid_set_hash(ds, r.rows);
  const auto n = static_cast<int64_t>(r.count);
  NoisyAnswer out;
  NoiseLayers layers;
  layers.true_count = r.count;

  bool suppressed = false;
  if (cfg.suppression) {
    if (n <= cfg.hard_floor) {
      suppressed = true;
    } else {
      layers.threshold = gaussian(cfg.salt ^ set_hash, cfg.threshold_mean, cfg.threshold_sd);
      suppressed = static_cast<double>(n) < layers.threshold;
    }
  }
  if (suppressed && !debug) {
    out.suppressed = true;
    return out;
  }

  double value = static_cast<double>(n);
  for (const auto& c : q.conditions()) {
    const uint64_t s = static_seed(c, cfg);
    const double st = gaussian(s, 0, 1);
    const double dy = gaussian(s ^ set_hash, 0, 1);
    value += st;
    layers.static_layers.push_back(st);
    layers.dynamic_layers.push_back(dy);
    if (debug) layers.canonical.push_back(canonical_string(c));
  }
  for (double dy : layers.dynamic_layers) value += dy;
  layers.unrounded = value;

  if (suppressed) {
    out.suppressed = true;
    out.value = 0;
  } else if (cfg.rounding == Rounding::kNearestNonNegative) {
    out.value = std::max(0.0, std::round(value));
  } else {
    out.value = value;
  }
  if (debug) out.layers = std::move(layers);
  return out;
}

}  // namespace engine_internal

// Noisy count: n + sum of static layers + sum of dynamic layers, with
// bucket suppression (value 0) and optional rounding.
inline NoisyAnswer answer(const Dataset& ds, const Query& q, const EngineConfig& cfg) {
  return engine_internal::run(ds, q, cfg, false);
}

// As answer(), with the per-condition layers. Harness-only.
inline NoisyAnswer answer_debug(const Dataset& ds, const Query& q, const EngineConfig& cfg) {
  return engine_internal::run(ds, q, cfg, true);
}

}  // namespace sticky

#endif  // STICKY_ENGINE_HPP_
