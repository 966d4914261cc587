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

#ifndef STICKY_INTERFACE_HPP_
#define STICKY_INTERFACE_HPP_

#include <cstddef>

#include "sticky/dataset.hpp"
#include "sticky/engine.hpp"
#include "sticky/query.hpp"

namespace sticky {

// What an analyst sees: a query goes in, a number comes out.
class QueryInterface {
 public:
  virtual ~QueryInterface() = default;
  virtual double ask(const Query& q) = 0;
};

// Answers through the noise engine. Stateless; one instance may be shared by
// many threads.
class EngineInterface : public QueryInterface {
 public:
  EngineInterface(const Dataset& ds, EngineConfig cfg) : ds_(ds), cfg_(cfg) { cfg_.validate(); }
  double ask(const Query& q) override { return answer(ds_, q, cfg_).value; }
  const EngineConfig& config() const { return cfg_; }

 private:
  const Dataset& ds_;
  EngineConfig cfg_;
};

// Counts the queries forwarded to the wrapped interface. Not thread-safe:
// use one per attack.
class CountingInterface : public QueryInterface {
 public:
  explicit CountingInterface(QueryInterface& inner) : inner_(inner) {}
  double ask(const Query& q) override {
    ++count_;
    return inner_.ask(q);
  }
  std::size_t count() const { return count_; }

 private:
  QueryInterface& inner_;
  std::size_t count_ = 0;
};

}  // namespace sticky

#endif  // STICKY_INTERFACE_HPP_
