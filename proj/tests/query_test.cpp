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

#include "sticky/query.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "sticky/error.hpp"
#include "sticky/random.hpp"
#include "sticky/sql.hpp"
#include "sticky/value.hpp"

namespace sticky {
namespace {

TEST(ValueTest, CanonicalForms) {
  EXPECT_EQ(Value::Integer(37).canonical(), "37");
  EXPECT_EQ(Value::Integer(-4).canonical(), "-4");
  EXPECT_EQ(Value::Decimal(2.0).canonical(), "2.0");
  EXPECT_EQ(Value::Decimal(0.1).canonical(), "0.1");
  EXPECT_EQ(Value::Decimal(-0.0).canonical(), "0.0");
  EXPECT_EQ(Value::Decimal(1e21).canonical(), "1e+21");
  EXPECT_EQ(Value::Text("Paris").canonical(), "Paris");
}

TEST(ValueTest, ParsingHelpers) {
  EXPECT_EQ(parse_integer("42"), 42);
  EXPECT_EQ(parse_integer("-7"), -7);
  EXPECT_FALSE(parse_integer("4.0").has_value());
  EXPECT_FALSE(parse_integer("").has_value());
  EXPECT_FALSE(parse_integer("99999999999999999999").has_value());
  EXPECT_EQ(parse_decimal("2.5"), 2.5);
  EXPECT_FALSE(parse_decimal("abc").has_value());
  EXPECT_FALSE(parse_decimal("inf").has_value());
  EXPECT_EQ(infer_value("12"), Value::Integer(12));
  EXPECT_EQ(infer_value("1.5"), Value::Decimal(1.5));
  EXPECT_EQ(infer_value("x1"), Value::Text("x1"));
}

TEST(ValueTest, Ordering) {
  EXPECT_LT(compare(Value::Integer(2), Value::Decimal(2.5)), 0);
  EXPECT_EQ(compare(Value::Integer(2), Value::Decimal(2.0)), 0);
  EXPECT_GT(compare(Value::Text("b"), Value::Text("a")), 0);
  EXPECT_THROW(compare(Value::Text("1"), Value::Integer(1)), EvalError);
  EXPECT_THROW(Value::Decimal(std::numeric_limits<double>::infinity()), InvalidArgument);
}

TEST(ConditionTest, CanonicalStrings) {
  EXPECT_EQ(canonical_string(Condition::Eq("Age", Value::Integer(37))), "age = 37");
  EXPECT_EQ(canonical_string(Condition::Neq("age", Value::Integer(37))), "age <> 37");
  EXPECT_EQ(canonical_string(Condition::Le("w", Value::Decimal(1.5))), "w <= 1.5");
  EXPECT_EQ(canonical_string(Condition::Gt("w", Value::Decimal(2))), "w > 2.0");
  EXPECT_EQ(canonical_string(Condition::In("c", {Value::Text("a"), Value::Text("b")})), "c in a,b");
  EXPECT_EQ(canonical_string(Condition::NotIn("n", {Value::Integer(1), Value::Integer(2)})),
            "n not in 1,2");
}

TEST(ConditionTest, Validation) {
  EXPECT_THROW(Condition("", Comparator::kEq, {Value::Integer(1)}), InvalidArgument);
  EXPECT_THROW(Condition("a", Comparator::kIn, {}), InvalidArgument);
  EXPECT_THROW(Condition("a", Comparator::kEq, {Value::Integer(1), Value::Integer(2)}),
               InvalidArgument);
}

TEST(ConditionTest, NegateEq) {
  EXPECT_EQ(negate_eq(Condition::Eq("a", Value::Integer(3))),
            Condition::Neq("a", Value::Integer(3)));
  EXPECT_THROW(negate_eq(Condition::Neq("a", Value::Integer(3))), InvalidArgument);
  EXPECT_THROW(negate_eq(Condition::Le("a", Value::Integer(3))), InvalidArgument);
}

TEST(QueryTest, Validation) {
  EXPECT_THROW(Query({}), InvalidArgument);
  EXPECT_THROW(
      Query({Condition::Eq("a", Value::Integer(1)), Condition::Eq("A", Value::Integer(1))}),
      InvalidArgument);
  const Query q({Condition::Eq("a", Value::Integer(1))});
  EXPECT_EQ(q.with(Condition::Neq("b", Value::Integer(2))).size(), 2u);
  EXPECT_THROW(q.with(Condition::Eq("a", Value::Integer(1))), InvalidArgument);
}

// Random condition over a fixed schema: each attribute has one value kind,
// as in any dataset.
Condition random_condition(Rng& rng) {
  static const char* kAttrs[] = {"age", "city", "w", "zip", "name"};
  const std::size_t a = rng.below(5);
  auto value = [&]() -> Value {
    switch (a % 3) {
      case 0:
        return Value::Integer(static_cast<int64_t>(rng.below(2000)) - 1000);
      case 1: {
        std::string s;
        const auto len = 1 + rng.below(6);
        for (uint64_t i = 0; i < len; ++i) s += static_cast<char>('a' + rng.below(26));
        return Value::Text(s);
      }
      default:
        return Value::Decimal(static_cast<double>(static_cast<int64_t>(rng.below(100000)) - 50000) /
                              64.0);
    }
  };
  const auto op = static_cast<Comparator>(rng.below(8));
  std::vector<Value> vs;
  const std::size_t n = is_list(op) ? 1 + rng.below(3) : 1;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(value());
  return Condition(kAttrs[a], op, std::move(vs));
}

TEST(CanonicalTest, InjectiveOverRandomConditions) {
  Rng rng(2024);
  std::unordered_map<std::string, Condition> seen;
  for (int i = 0; i < 100000; ++i) {
    Condition c = random_condition(rng);
    const std::string key = canonical_string(c);
    auto [it, inserted] = seen.emplace(key, c);
    if (!inserted) {
      ASSERT_EQ(it->second, c) << "canonical collision on '" << key << "'";
    }
  }
}

TEST(SqlParseTest, BasicQuery) {
  const Query q =
      parse_query("SELECT COUNT(*) FROM adult WHERE age = 37 AND city <> 'New York' AND w >= 1.5");
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q.conditions()[0], Condition::Eq("age", Value::Integer(37)));
  EXPECT_EQ(q.conditions()[1], Condition::Neq("city", Value::Text("New York")));
  EXPECT_EQ(q.conditions()[2], Condition::Ge("w", Value::Decimal(1.5)));
}

TEST(SqlParseTest, ListsAliasesAndQuoting) {
  const Query q = parse_query(
      "select count(*) from \"My Table\" where \"Home City\" in ('a', 'it''s') and "
      "n not in (1, -2) and x != 3;");
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q.conditions()[0], Condition::In("home city", {Value::Text("a"), Value::Text("it's")}));
  EXPECT_EQ(q.conditions()[1], Condition::NotIn("n", {Value::Integer(1), Value::Integer(-2)}));
  EXPECT_EQ(q.conditions()[2], Condition::Neq("x", Value::Integer(3)));
}

std::size_t error_position(const std::string& sql) {
  try {
    parse_query(sql);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

TEST(SqlParseTest, UnsupportedConstructsReportPosition) {
  const std::string head = "SELECT count(*) FROM t WHERE ";
  EXPECT_EQ(error_position(head + "a = 1 OR b = 2"), head.size() + 6);
  EXPECT_EQ(error_position(head + "a = 1 GROUP BY a"), head.size() + 6);
  EXPECT_EQ(error_position(head + "a = 1 LIMIT 3"), head.size() + 6);
  EXPECT_EQ(error_position(head + "(a = 1)"), head.size());
  EXPECT_EQ(error_position(head + "NOT a = 1"), head.size());
  EXPECT_EQ(error_position(head + "lower(a) = 'x'"), head.size() + 5);
  EXPECT_EQ(error_position(head + "a = b"), head.size() + 4);
  EXPECT_EQ(error_position(head + "a = (SELECT 1)"), head.size() + 4);
  EXPECT_EQ(error_position(head + "a ~ 1"), head.size() + 2);
  EXPECT_EQ(error_position(head + "a = 'open"), head.size() + 4);
  EXPECT_EQ(error_position("SELECT sum(x) FROM t WHERE a = 1"), 7u);
  EXPECT_EQ(error_position("SELECT count(*) FROM t"), 22u);
  EXPECT_NE(error_position(head + "a = 1 AND a = 1"), std::string::npos);
  EXPECT_NE(error_position(head + "a = 99999999999999999999"), std::string::npos);
}

TEST(SqlRenderTest, RoundTripRandomQueries) {
  Rng rng(77);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Condition> cs;
    std::unordered_map<std::string, bool> keys;
    const auto n = 1 + rng.below(5);
    while (cs.size() < n) {
      Condition c = random_condition(rng);
      if (keys.emplace(canonical_string(c), true).second) cs.push_back(std::move(c));
    }
    const Query q(std::move(cs));
    const std::string sql = render_sql(q);
    EXPECT_EQ(parse_query(sql), q) << sql;
  }
}

TEST(SqlRenderTest, ReservedAndOddIdentifiersAreQuoted) {
  const Query q(
      {Condition::Eq("select", Value::Integer(1)), Condition::Eq("two words", Value::Text("x"))});
  const std::string sql = render_sql(q, "from");
  EXPECT_EQ(sql, "SELECT count(*) FROM \"from\" WHERE \"select\" = 1 AND \"two words\" = 'x'");
  EXPECT_EQ(parse_query(sql), q);
}

}  // namespace
}  // namespace sticky
