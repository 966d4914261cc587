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

#ifndef STICKY_QUERY_HPP_
#define STICKY_QUERY_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sticky/dataset.hpp"
#include "sticky/error.hpp"
#include "sticky/value.hpp"

namespace sticky {

enum class Comparator { kEq, kNeq, kLe, kLt, kGe, kGt, kIn, kNotIn };

// Operator token used in canonical strings and rendered SQL.
inline const char* token(Comparator op) {
  switch (op) {
    case Comparator::kEq:
      return "=";
    case Comparator::kNeq:
      return "<>";
    case Comparator::kLe:
      return "<=";
    case Comparator::kLt:
      return "<";
    case Comparator::kGe:
      return ">=";
    case Comparator::kGt:
      return ">";
    case Comparator::kIn:
      return "in";
    case Comparator::kNotIn:
      return "not in";
  }
  return "?";
}

inline bool is_range(Comparator op) {
  return op == Comparator::kLe || op == Comparator::kLt || op == Comparator::kGe ||
         op == Comparator::kGt;
}

inline bool is_list(Comparator op) { return op == Comparator::kIn || op == Comparator::kNotIn; }

// `attribute op operand(s)`. The attribute name is stored lowercased.
class Condition {
 public:
  Condition(std::string attribute, Comparator op, std::vector<Value> operands)
      : attribute_(lowercase(attribute)), op_(op), operands_(std::move(operands)) {
    if (attribute_.empty()) throw InvalidArgument("condition needs an attribute name");
    if (is_list(op_)) {
      if (operands_.empty()) throw InvalidArgument("IN list must not be empty");
    } else if (operands_.size() != 1) {
      throw InvalidArgument("comparator '" + std::string(token(op_)) + "' takes one operand");
    }
  }

  static Condition Eq(std::string a, Value v) {
    return {std::move(a), Comparator::kEq, {std::move(v)}};
  }
  static Condition Neq(std::string a, Value v) {
    return {std::move(a), Comparator::kNeq, {std::move(v)}};
  }
  static Condition Le(std::string a, Value v) {
    return {std::move(a), Comparator::kLe, {std::move(v)}};
  }
  static Condition Lt(std::string a, Value v) {
    return {std::move(a), Comparator::kLt, {std::move(v)}};
  }
  static Condition Ge(std::string a, Value v) {
    return {std::move(a), Comparator::kGe, {std::move(v)}};
  }
  static Condition Gt(std::string a, Value v) {
    return {std::move(a), Comparator::kGt, {std::move(v)}};
  }
  static Condition In(std::string a, std::vector<Value> vs) {
    return {std::move(a), Comparator::kIn, std::move(vs)};
  }
  static Condition NotIn(std::string a, std::vector<Value> vs) {
    return {std::move(a), Comparator::kNotIn, std::move(vs)};
  }

  const std::string& attribute() const { return attribute_; }
  Comparator op() const { return op_; }
  const std::vector<Value>& operands() const { return operands_; }
  const Value& operand() const { return operands_.front(); }

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  std::string attribute_;
  Comparator op_;
  std::vector<Value> operands_;
};

// Frozen rendering that seeds the noise layers:
//   <lowercase attribute> SP <token> SP <value>
// with IN lists joined by ',' in the given order.
inline std::string canonical_string(const Condition& c) {
  std::string out = c.attribute();
  out += ' ';
  out += token(c.op());
  out += ' ';
  for (std::size_t i = 0; i < c.operands().size(); ++i) {
    if (i) out += ',';
    out += c.operands()[i].canonical();
  }
  return out;
}

// a = x  ->  a <> x.
inline Condition negate_eq(const Condition& c) {
  if (c.op() != Comparator::kEq) {
    throw InvalidArgument("negate_eq expects an '=' condition, got '" + canonical_string(c) + "'");
  }
  return Condition::Neq(c.attribute(), c.operand());
}

// Conjunction of one or more conditions with pairwise distinct canonical strings.
class Query {
 public:
  explicit Query(std::vector<Condition> conditions) : conditions_(std::move(conditions)) {
    if (conditions_.empty()) throw InvalidArgument("a query needs at least one condition");
    std::unordered_set<std::string> seen;
    for (const auto& c : conditions_) {
      if (!seen.insert(canonical_string(c)).second) {
        throw InvalidArgument("duplicate condition '" + canonical_string(c) + "'");
      }
    }
  }

  const std::vector<Condition>& conditions() const { return conditions_; }
  std::size_t size() const { return conditions_.size(); }

  // A copy with `c` appended.
  Query with(Condition c) const {
    auto cs = conditions_;
    cs.push_back(std::move(c));
    return Query(std::move(cs));
  }

  friend bool operator==(const Query&, const Query&) = default;

 private:
  std::vector<Condition> conditions_;
};

}  // namespace sticky

#endif  // STICKY_QUERY_HPP_
