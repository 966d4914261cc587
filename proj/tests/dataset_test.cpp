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

#include "sticky/dataset.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sticky/error.hpp"
#include "sticky/generators.hpp"

namespace sticky {
namespace {

constexpr const char* kToy =
    "uid,Age,City,Score,Secret\n"
    "u1,37,Paris,1.5,1\n"
    "u2,37,\"New York, NY\",2,0\n"
    "u3,38,Paris,2.5,1\n";

std::string load_error(const std::string& text) {
  try {
    load_csv_text(text, "uid", "secret");
  } catch (const LoadError& e) {
    return e.what();
  }
  return "";
}

TEST(CsvParseTest, QuotesAndCrlf) {
  const auto rows = csv::parse("a,b\r\n\"x,\"\"y\"\"\",z\r\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x,\"y\"", "z"}));
  EXPECT_EQ(rows[1].line, 2u);
}

TEST(CsvParseTest, QuoteHelper) {
  EXPECT_EQ(csv::quote("plain"), "plain");
  EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(LoadCsvTest, TypesColumnsAndLowercasesNames) {
  const Dataset ds = load_csv_text(kToy, "UID", "Secret");
  EXPECT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds.attributes(), (std::vector<std::string>{"age", "city", "score", "secret"}));
  EXPECT_EQ(ds.secret(), "secret");
  EXPECT_EQ(ds.column("age").kind, ValueKind::kInteger);
  EXPECT_EQ(ds.column("city").kind, ValueKind::kText);
  EXPECT_EQ(ds.column("score").kind, ValueKind::kDecimal);
  EXPECT_EQ(ds.value(1, ds.require_attribute("city")), Value::Text("New York, NY"));
  EXPECT_EQ(ds.value(1, ds.require_attribute("score")), Value::Decimal(2.0));
  EXPECT_EQ(ds.secret_value(2), 1);
  EXPECT_EQ(ds.non_secret_attributes(), (std::vector<std::string>{"age", "city", "score"}));
}

TEST(LoadCsvTest, RowLookupAndRecords) {
  const Dataset ds = load_csv_text(kToy, "uid", "secret");
  ASSERT_TRUE(ds.row_of("u3").has_value());
  EXPECT_EQ(*ds.row_of("u3"), 2u);
  EXPECT_FALSE(ds.row_of("nobody").has_value());
  const Record r = ds.record(0);
  EXPECT_EQ(r.uid, "u1");
  EXPECT_EQ(r.values.at("age"), Value::Integer(37));
  const std::vector<std::string> attrs = {"age", "city"};
  const auto x = restrict(r, attrs);
  EXPECT_EQ(x.size(), 2u);
  const std::vector<std::string> one = {"age"};
  EXPECT_EQ(restrict(x, one).size(), 1u);
  const std::vector<std::string> bad = {"height"};
  EXPECT_THROW(restrict(r, bad), InvalidArgument);
}

TEST(LoadCsvTest, ErrorsNameTheLine) {
  EXPECT_NE(load_error("uid,a,secret\nu1,1,0\nu1,2,1\n").find("line 3"), std::string::npos);
  EXPECT_NE(load_error("uid,a,secret\nu1,1,0\nu2,2\n").find("line 3"), std::string::npos);
  EXPECT_NE(load_error("uid,a,secret\nu1,,0\n").find("line 2"), std::string::npos);
  EXPECT_NE(load_error("uid,a,secret\nu1,1,0\nu2,1,2\n").find("line 3"), std::string::npos);
  EXPECT_NE(load_error("uid,a,secret\nu1,1,yes\n").find("line 2"), std::string::npos);
}

TEST(LoadCsvTest, StructuralErrors) {
  EXPECT_THROW(load_csv_text("", "uid", "secret"), LoadError);
  EXPECT_THROW(load_csv_text("uid,a\nu1,1\n", "uid", "secret"), LoadError);
  EXPECT_THROW(load_csv_text("a,secret\n1,0\n", "uid", "secret"), LoadError);
  EXPECT_THROW(load_csv_text("uid,a,secret\n", "uid", "secret"), LoadError);
  EXPECT_THROW(load_csv_text("uid,a,A,secret\nu1,1,2,0\n", "uid", "secret"), LoadError);
  EXPECT_THROW(load_csv("/nonexistent/file.csv", "uid", "secret"), LoadError);
}

TEST(LoadCsvTest, WriteReadRoundTrip) {
  const Dataset ds = load_csv_text(kToy, "uid", "secret");
  std::ostringstream out;
  write_csv(ds, out);
  const Dataset back = load_csv_text(out.str(), "uid", "secret");
  ASSERT_EQ(back.size(), ds.size());
  for (std::size_t r = 0; r < ds.size(); ++r) {
    EXPECT_EQ(back.uid(r), ds.uid(r));
    for (std::size_t a = 0; a < ds.attributes().size(); ++a) {
      EXPECT_EQ(back.value(r, a), ds.value(r, a));
    }
  }
}

TEST(DatasetCreateTest, Validation) {
  auto make = [](std::vector<std::string> uids, std::vector<int64_t> secret) {
    std::vector<ColumnData> cols;
    cols.emplace_back(std::vector<int64_t>(uids.size(), 1));
    cols.emplace_back(std::move(secret));
    return Dataset::Create({"a", "s"}, "s", std::move(uids), std::move(cols));
  };
  EXPECT_NO_THROW(make({"x", "y"}, {0, 1}));
  EXPECT_THROW(make({"x", "x"}, {0, 1}), LoadError);
  EXPECT_THROW(make({"x", "y"}, {0, 3}), LoadError);
  EXPECT_THROW(make({}, {}), LoadError);
}

TEST(ColumnTest, DictionaryAndPostings) {
  const Dataset ds =
      load_csv_text("uid,a,secret\nu1,5,0\nu2,3,1\nu3,5,1\nu4,9,0\n", "uid", "secret");
  const Column& col = ds.column("a");
  EXPECT_EQ(col.distinct(), 3u);
  const auto code = col.code_of(Value::Integer(5));
  ASSERT_TRUE(code.has_value());
  EXPECT_EQ(col.rows_in(*code, *code + 1), 2u);
  EXPECT_FALSE(col.code_of(Value::Integer(4)).has_value());
  EXPECT_EQ(col.lower_bound(Value::Integer(4)), 1u);
  EXPECT_EQ(col.upper_bound(Value::Integer(5)), 2u);
}

TEST(GeneratorTest, CompleteKHasEveryTupleOnce) {
  const Dataset ds = generate_complete_k(3, 3, 1);
  EXPECT_EQ(ds.size(), 27u);
  std::set<std::vector<int64_t>> tuples;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    std::vector<int64_t> t;
    for (std::size_t a = 0; a < 3; ++a) t.push_back(ds.value(r, a).as_integer());
    tuples.insert(t);
  }
  EXPECT_EQ(tuples.size(), 27u);
  EXPECT_THROW(generate_complete_k(1, 3, 1), InvalidArgument);
  EXPECT_THROW(generate_complete_k(12, 40, 1), InvalidArgument);
}

TEST(GeneratorTest, AdultLikeShape) {
  const Dataset ds = generate_adult_like();
  EXPECT_EQ(ds.size(), 30162u);
  EXPECT_EQ(ds.attributes().size(), 11u);
  EXPECT_EQ(ds.secret(), "salary");
  double positives = 0;
  for (std::size_t r = 0; r < ds.size(); ++r) positives += ds.secret_value(r);
  EXPECT_NEAR(positives / static_cast<double>(ds.size()), 0.249, 0.01);
}

TEST(GeneratorTest, CdrStandinIsSparse) {
  const Dataset ds = generate_cdr_standin({2000, 300, 1e-3, 0.05, 7});
  EXPECT_EQ(ds.size(), 2000u);
  EXPECT_EQ(ds.attributes().size(), 301u);
  double ones = 0;
  for (std::size_t a = 0; a < 300; ++a) {
    for (std::size_t r = 0; r < ds.size(); ++r) ones += ds.value(r, a).as_integer();
  }
  const double rate = ones / (2000.0 * 300.0);
  EXPECT_GT(rate, 2e-4);
  EXPECT_LT(rate, 5e-3);
}

TEST(GeneratorTest, RandomizedSecretIsFair) {
  const Dataset ds = randomize_secret(generate_adult_like({5000, 3}), 11);
  double s = 0;
  for (std::size_t r = 0; r < ds.size(); ++r) s += ds.secret_value(r);
  // Binomial(5000, 1/2): 4 standard deviations.
  EXPECT_NEAR(s / 5000.0, 0.5, 4 * std::sqrt(0.25 / 5000.0));
}

}  // namespace
}  // namespace sticky
