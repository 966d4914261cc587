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

#ifndef STICKY_SCHEMA_HPP_
#define STICKY_SCHEMA_HPP_

#include <map>
#include <string>
#include <vector>

#include "sticky/dataset.hpp"
#include "sticky/error.hpp"
#include "sticky/value.hpp"

namespace sticky {

// Public metadata about a table: attribute kinds and value domains. This is
// what an analyst may know without asking count queries.
struct Schema {
  struct Attribute {
    ValueKind kind = ValueKind::kInteger;
    std::vector<Value> domain;  // sorted, distinct
  };
  std::map<std::string, Attribute> attributes;
  std::string secret;

  const Attribute& at(const std::string& name) const {
    auto it = attributes.find(lowercase(name));
    if (it == attributes.end()) throw InvalidArgument("unknown attribute '" + name + "'");
    return it->second;
  }
};

inline Schema schema_of(const Dataset& ds) {
  Schema s;
  s.secret = ds.secret();
  for (std::size_t a = 0; a < ds.attributes().size(); ++a) {
    const Column& col = ds.column(a);
    s.attributes[ds.attributes()[a]] = {col.kind, col.dictionary};
  }
  return s;
}

}  // namespace sticky

#endif  // STICKY_SCHEMA_HPP_
