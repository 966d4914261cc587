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

#ifndef STICKY_GENERATORS_HPP_
#define STICKY_GENERATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sticky/dataset.hpp"
#include "sticky/error.hpp"
#include "sticky/random.hpp"

namespace sticky {

// Rows allowed for a generated Complete_k table.
inline constexpr std::size_t kCompleteMaxRows = std::size_t{1} << 25;

inline std::string padded_uid(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n).size();
  return "u" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

// Every k-tuple over {1..B} once (attributes a1..ak), plus a uniform binary
// secret drawn from `seed`.
inline Dataset generate_complete_k(int B, int k, uint64_t seed) {
  if (B < 2) throw InvalidArgument("B must be at least 2");
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::size_t rows = 1;
  for (int i = 0; i < k; ++i) {
    if (rows > kCompleteMaxRows / static_cast<std::size_t>(B)) {
      throw InvalidArgument("B^k exceeds the row budget of " + std::to_string(kCompleteMaxRows));
    }
    rows *= static_cast<std::size_t>(B);
  }
  std::vector<std::string> attrs;
  std::vector<ColumnData> cols;
  for (int a = 0; a < k; ++a) {
    attrs.push_back("a" + std::to_string(a + 1));
    std::vector<int64_t> col(rows);
    std::size_t stride = 1;
    for (int b = a + 1; b < k; ++b) stride *= static_cast<std::size_t>(B);
    for (std::size_t r = 0; r < rows; ++r) {
      col[r] = static_cast<int64_t>((r / stride) % static_cast<std::size_t>(B)) + 1;
    }
    cols.emplace_back(std::move(col));
  }
  Rng rng(seed);
  std::vector<int64_t> secret(rows);
  for (auto& s : secret) s = rng.coin() ? 1 : 0;
  attrs.push_back("secret");
  cols.emplace_back(std::move(secret));
  std::vector<std::string> uids(rows);
  for (std::size_t r = 0; r < rows; ++r) uids[r] = padded_uid(r + 1, rows);
  return Dataset::Create(std::move(attrs), "secret", std::move(uids), std::move(cols));
}

// Copy of `ds` with the secret resampled as fair coins.
inline Dataset randomize_secret(const Dataset& ds, uint64_t seed) {
  std::vector<ColumnData> cols;
  Rng rng(seed);
  for (std::size_t a = 0; a < ds.attributes().size(); ++a) {
    if (a == ds.secret_index()) {
      std::vector<int64_t> s(ds.size());
      for (auto& v : s) v = rng.coin() ? 1 : 0;
      cols.emplace_back(std::move(s));
    } else {
      cols.push_back(ds.column_data(a));
    }
  }
  return Dataset::Create(ds.attributes(), ds.secret(), ds.uids(), std::move(cols));
}

namespace gen_internal {

inline std::size_t categorical(Rng& rng, const std::vector<double>& w) {
  double total = 0;
  for (double x : w) total += x;
  double u = rng.unit() * total;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (u < w[i]) return i;
    u -= w[i];
  }
  return w.size() - 1;
}

struct Category {
  const char* name;
  double weight;
};

inline std::size_t pick(Rng& rng, const std::vector<Category>& cats,
                        const std::vector<double>& tilt = {}) {
  std::vector<double> w;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    w.push_back(cats[i].weight * (i < tilt.size() ? tilt[i] : 1.0));
  }
  return categorical(rng, w);
}

inline const std::vector<Category>& education() {
  static const std::vector<Category> v = {
      {"Preschool", 0.15}, {"1st-4th", 0.5},     {"5th-6th", 0.96},    {"7th-8th", 1.9},
      {"9th", 1.5},        {"10th", 2.7},        {"11th", 3.5},        {"12th", 1.2},
      {"HS-grad", 32.6},   {"Some-college", 22}, {"Assoc-voc", 4.3},   {"Assoc-acdm", 3.3},
      {"Bachelors", 16.7}, {"Masters", 5.4},     {"Prof-school", 1.8}, {"Doctorate", 1.2}};
  return v;
}

inline const std::vector<Category>& workclass() {
  static const std::vector<Category> v = {
      {"Private", 73.9},     {"Self-emp-not-inc", 8.3}, {"Local-gov", 6.9},   {"State-gov", 4.2},
      {"Self-emp-inc", 3.6}, {"Federal-gov", 3.1},      {"Without-pay", 0.05}};
  return v;
}

inline const std::vector<Category>& occupation() {
  static const std::vector<Category> v = {
      {"Prof-specialty", 13.4},   {"Craft-repair", 13.3},    {"Exec-managerial", 13.2},
      {"Adm-clerical", 12.3},     {"Sales", 11.9},           {"Other-service", 10.6},
      {"Machine-op-inspct", 6.5}, {"Transport-moving", 5.2}, {"Handlers-cleaners", 4.5},
      {"Farming-fishing", 3.3},   {"Tech-support", 3.0},     {"Protective-serv", 2.1},
      {"Priv-house-serv", 0.5},   {"Armed-Forces", 0.03}};
  return v;
}

inline const std::vector<Category>& race() {
  static const std::vector<Category> v = {{"White", 86.0},
                                          {"Black", 9.3},
                                          {"Asian-Pac-Islander", 3.0},
                                          {"Amer-Indian-Eskimo", 1.0},
                                          {"Other", 0.8}};
  return v;
}

inline const std::vector<Category>& country() {
  static const std::vector<Category> v = {{"United-States", 91.2},
                                          {"Mexico", 2.0},
                                          {"Philippines", 0.6},
                                          {"Germany", 0.42},
                                          {"Puerto-Rico", 0.36},
                                          {"Canada", 0.35},
                                          {"India", 0.33},
                                          {"El-Salvador", 0.33},
                                          {"Cuba", 0.3},
                                          {"England", 0.28},
                                          {"Jamaica", 0.26},
                                          {"South", 0.24},
                                          {"China", 0.23},
                                          {"Italy", 0.22},
                                          {"Dominican-Republic", 0.22},
                                          {"Vietnam", 0.21},
                                          {"Guatemala", 0.2},
                                          {"Japan", 0.19},
                                          {"Poland", 0.19},
                                          {"Columbia", 0.18},
                                          {"Taiwan", 0.14},
                                          {"Haiti", 0.14},
                                          {"Iran", 0.14},
                                          {"Portugal", 0.11},
                                          {"Nicaragua", 0.11},
                                          {"Peru", 0.1},
                                          {"Greece", 0.1},
                                          {"France", 0.09},
                                          {"Ecuador", 0.09},
                                          {"Ireland", 0.08},
                                          {"Hong", 0.06},
                                          {"Cambodia", 0.06},
                                          {"Trinadad&Tobago", 0.06},
                                          {"Thailand", 0.06},
                                          {"Laos", 0.06},
                                          {"Yugoslavia", 0.05},
                                          {"Outlying-US", 0.05},
                                          {"Hungary", 0.04},
                                          {"Honduras", 0.04},
                                          {"Scotland", 0.04},
                                          {"Holand-Netherlands", 0.01}};
  return v;
}

inline const std::vector<Category>& marital() {
  static const std::vector<Category> v = {
      {"Married-civ-spouse", 46.6}, {"Never-married", 32.3}, {"Divorced", 14.0},
      {"Separated", 3.1},           {"Widowed", 2.7},        {"Married-spouse-absent", 1.2},
      {"Married-AF-spouse", 0.07}};
  return v;
}

// Hours: a heavy spike at 40 and secondary spikes at round numbers.
inline int64_t hours(Rng& rng, bool part_time) {
  static const std::vector<std::pair<int, double>> spikes = {
      {40, 48},  {50, 8.6}, {45, 5.7}, {60, 4.5}, {35, 4.0}, {20, 3.9}, {30, 3.4},
      {55, 2.2}, {25, 2.0}, {48, 1.6}, {38, 1.4}, {15, 1.2}, {70, 0.9}, {32, 0.8},
      {10, 0.8}, {65, 0.7}, {36, 0.7}, {42, 0.7}, {24, 0.7}, {44, 0.6}};
  std::vector<double> w;
  for (const auto& [h, p] : spikes) {
    double t = p;
    if (part_time && h >= 40) t *= 0.15;
    w.push_back(t);
  }
  w.push_back(1.0);  // spread over 1..99
  const std::size_t i = categorical(rng, w);
  if (i < spikes.size()) return spikes[i].first;
  return 1 + static_cast<int64_t>(rng.below(99));
}

}  // namespace gen_internal

struct AdultLikeParams {
  std::size_t rows = 30162;
  uint64_t seed = 42;
};

// Synthetic stand-in for the UCI Adult table: 10 quasi-identifiers with
// realistic marginals and dependencies, plus a binary `salary` secret
// (1 = >50K) driven by a logistic model.
inline Dataset generate_adult_like(const AdultLikeParams& p = {}) {
  using namespace gen_internal;
  if (p.rows == 0) throw InvalidArgument("rows must be positive");
  Rng rng(p.seed);
  std::vector<int64_t> age(p.rows), hrs(p.rows), salary(p.rows);
  std::vector<std::string> wc(p.rows), edu(p.rows), mar(p.rows), occ(p.rows), rel(p.rows),
      rc(p.rows), sx(p.rows), nc(p.rows);
  const auto& E = education();
  const auto& W = workclass();
  const auto& O = occupation();
  const auto& R = race();
  const auto& C = country();
  const auto& M = marital();

  for (std::size_t r = 0; r < p.rows; ++r) {
    const bool male = rng.unit() < 0.676;
    // Age: census five-year bands, uniform within a band.
    static const std::vector<double> kAgeBands = {5.0, 10.4, 12.3, 13.0, 13.0, 11.9, 10.2,
                                                  7.7, 5.6,  3.8,  1.9,  0.8,  0.4,  0.2};
    const std::size_t band = categorical(rng, kAgeBands);
    const int64_t lo = band == 0 ? 17 : 15 + 5 * static_cast<int64_t>(band);
    const int64_t width = band == 0 ? 3 : band + 1 == kAgeBands.size() ? 11 : 5;
    const auto ag = lo + static_cast<int64_t>(rng.below(static_cast<uint64_t>(width)));

    const std::size_t ri = pick(rng, R);
    std::size_t ci;
    if (ri == 0) {
      ci = pick(rng, C, {1.0, 1.6, 0.1, 1.3, 0.8, 1.3, 0.1, 1.2, 1.2, 1.3, 0.1, 0.3, 0.1, 1.3,
                         0.5, 0.1, 1.0, 0.4, 1.3, 1.0, 0.1, 0.1, 1.2, 1.3, 1.0, 1.0, 1.3, 1.3,
                         1.0, 1.3, 0.1, 0.1, 0.1, 0.1, 0.1, 1.3, 1.0, 1.3, 1.0, 1.3, 1.3});
    } else if (ri == 2) {
      ci = pick(rng, C, {0.25, 0.1, 40,  0.2, 0.1, 2,   40, 0.1, 0.1, 1,   0.1, 40,  40,  0.1,
                         0.1,  40,  0.1, 30,  0.1, 0.1, 40, 0.1, 10,  0.1, 0.1, 0.1, 0.1, 0.1,
                         0.1,  0.1, 40,  40,  0.1, 40,  40, 0.1, 2,   0.1, 0.1, 0.1, 0.1});
    } else if (ri == 1) {
      ci = pick(rng, C, {1.0, 0.1, 0.1, 0.2, 1.5, 0.5, 0.1, 0.1, 1.0, 1.0, 15,  0.1, 0.1, 0.1,
                         3,   0.1, 0.1, 0.1, 0.1, 0.5, 0.1, 15,  0.1, 0.1, 0.5, 0.2, 0.1, 0.5,
                         0.2, 0.1, 0.1, 0.1, 15,  0.1, 0.1, 0.1, 1,   0.1, 0.5, 0.1, 0.1});
    } else {
      ci = pick(rng, C, {1.0, 5,   0.1, 0.1, 1,   0.3, 0.1, 3,   1,   0.1, 0.1, 0.1, 0.1, 0.1,
                         1,   0.1, 3,   0.1, 0.1, 2,   0.1, 0.1, 0.1, 0.1, 3,   3,   0.1, 0.1,
                         2,   0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 1,   0.1, 2,   0.1, 0.1});
    }

    // Education shifts up with age until ~35 and with native-born status.
    std::vector<double> et(E.size(), 1.0);
    if (ag < 22) {
      for (std::size_t i = 12; i < E.size(); ++i) et[i] = 0.05;
      et[9] = 2.0;
      for (std::size_t i = 5; i < 8; ++i) et[i] = 3.0;
    }
    if (ci == 1) {
      for (std::size_t i = 0; i < 8; ++i) et[i] = 8.0;
    }
    const std::size_t ei = pick(rng, E, et);
    const double schooling = ei <= 7 ? 0.0 : ei <= 9 ? 1.0 : ei <= 11 ? 1.5 : ei == 12 ? 2.5 : 3.5;

    // Marital status by age and sex.
    std::vector<double> mt(M.size(), 1.0);
    if (ag < 25) {
      mt = {0.15, 6.0, 0.05, 0.3, 0.01, 0.4, 1.0};
    } else if (ag < 32) {
      mt = {0.9, 1.8, 0.6, 1.0, 0.05, 1.0, 1.0};
    } else if (ag > 64) {
      mt = {1.0, 0.2, 1.0, 0.5, 8.0, 1.0, 1.0};
    } else {
      mt = {1.25, 0.35, 1.4, 1.1, 0.6, 1.0, 1.0};
    }
    if (male) {
      mt[0] *= 1.7;
    } else {
      mt[0] *= 0.4;
      mt[2] *= 1.8;
      mt[3] *= 1.8;
      mt[4] *= 3.0;
    }
    const std::size_t mi = pick(rng, M, mt);
    const bool married = mi == 0 || mi == 6;

    std::string relation;
    if (married) {
      relation = rng.unit() < 0.97 ? (male ? "Husband" : "Wife") : "Other-relative";
    } else {
      std::vector<double> rw = {ag < 25 ? 5.0 : 0.6, 4.0, mi == 1 ? 1.0 : 2.5, 0.5};
      static const char* kRel[] = {"Own-child", "Not-in-family", "Unmarried", "Other-relative"};
      relation = kRel[categorical(rng, rw)];
    }

    // Occupation by sex and schooling.
    std::vector<double> ot(O.size(), 1.0);
    if (male) {
      ot = {1.0, 1.8, 1.2, 0.45, 1.0, 0.7, 1.2, 1.8, 1.4, 1.6, 0.9, 1.7, 0.1, 2.0};
    } else {
      ot = {1.0, 0.15, 0.7, 2.2, 1.0, 1.6, 0.7, 0.15, 0.4, 0.3, 1.2, 0.3, 4.0, 0.1};
    }
    if (schooling >= 2.5) {
      ot[0] *= 2.5;
      ot[2] *= 1.8;
      ot[1] *= 0.3;
      ot[5] *= 0.3;
      ot[6] *= 0.2;
      ot[8] *= 0.2;
    } else if (schooling == 0.0) {
      ot[0] *= 0.1;
      ot[2] *= 0.3;
      ot[5] *= 2.0;
      ot[8] *= 2.2;
      ot[9] *= 2.0;
    }
    const std::size_t oi = pick(rng, O, ot);

    std::vector<double> wt(W.size(), 1.0);
    if (oi == 9) wt = {0.6, 5.0, 0.5, 0.5, 1.0, 0.2, 1.0};
    if (oi == 11) wt = {0.4, 0.1, 5.0, 3.0, 0.2, 2.0, 1.0};
    if (oi == 0 && schooling >= 2.5) wt = {0.8, 1.3, 2.0, 2.5, 1.0, 1.5, 1.0};
    const std::size_t wi = pick(rng, W, wt);

    const bool part_time = ag < 22 || ag > 67 || (!male && rng.unit() < 0.2);
    const int64_t h = hours(rng, part_time);

    // Salary: logistic in schooling, age, marriage, sex, hours, occupation.
    const double age_term = -std::pow((static_cast<double>(ag) - 50) / 14.0, 2);
    double z = -3.0 + 0.95 * schooling + 1.0 * age_term + (married ? 1.9 : 0.0) +
               (male ? 0.25 : 0.0) + 0.035 * (static_cast<double>(h) - 40);
    if (oi == 0 || oi == 2) z += 0.7;
    if (oi == 5 || oi == 8 || oi == 12) z -= 1.0;
    if (wi == 4) z += 0.6;
    const double pr = 1 / (1 + std::exp(-z));

    age[r] = ag;
    hrs[r] = h;
    salary[r] = rng.unit() < pr ? 1 : 0;
    wc[r] = W[wi].name;
    edu[r] = E[ei].name;
    mar[r] = M[mi].name;
    occ[r] = O[oi].name;
    rel[r] = relation;
    rc[r] = R[ri].name;
    sx[r] = male ? "Male" : "Female";
    nc[r] = C[ci].name;
  }

  std::vector<std::string> attrs = {
      "age",  "workclass", "education",      "marital_status", "occupation", "relationship",
      "race", "sex",       "hours_per_week", "native_country", "salary"};
  std::vector<ColumnData> cols;
  cols.emplace_back(std::move(age));
  cols.emplace_back(std::move(wc));
  cols.emplace_back(std::move(edu));
  cols.emplace_back(std::move(mar));
  cols.emplace_back(std::move(occ));
  cols.emplace_back(std::move(rel));
  cols.emplace_back(std::move(rc));
  cols.emplace_back(std::move(sx));
  cols.emplace_back(std::move(hrs));
  cols.emplace_back(std::move(nc));
  cols.emplace_back(std::move(salary));
  std::vector<std::string> uids(p.rows);
  for (std::size_t r = 0; r < p.rows; ++r) uids[r] = padded_uid(r + 1, p.rows);
  return Dataset::Create(std::move(attrs), "salary", std::move(uids), std::move(cols));
}

struct CdrStandinParams {
  std::size_t rows = 5000;
  std::size_t attributes = 2000;
  double positive_rate = 1e-3;
  double secret_rate = 0.05;
  uint64_t seed = 7;
};

// Sparse binary table: attribute c0..c{m-1} is 1 with a per-attribute rate
// spread log-uniformly around `positive_rate`; `secret` is 1 with
// `secret_rate`.
inline Dataset generate_cdr_standin(const CdrStandinParams& p = {}) {
  if (p.rows == 0 || p.attributes == 0) {
    throw InvalidArgument("rows and attributes must be positive");
  }
  if (!(p.positive_rate > 0 && p.positive_rate < 1)) {
    throw InvalidArgument("positive_rate must be in (0,1)");
  }
  Rng rng(p.seed);
  std::vector<std::string> attrs;
  std::vector<ColumnData> cols;
  for (std::size_t a = 0; a < p.attributes; ++a) {
    const double rate = std::min(0.5, p.positive_rate * std::exp(2.0 * (rng.unit() - 0.5) * 2.0));
    std::vector<int64_t> col(p.rows);
    for (auto& v : col) v = rng.unit() < rate ? 1 : 0;
    attrs.push_back("c" + std::to_string(a));
    cols.emplace_back(std::move(col));
  }
  std::vector<int64_t> secret(p.rows);
  for (auto& v : secret) v = rng.unit() < p.secret_rate ? 1 : 0;
  attrs.push_back("secret");
  cols.emplace_back(std::move(secret));
  std::vector<std::string> uids(p.rows);
  for (std::size_t r = 0; r < p.rows; ++r) uids[r] = padded_uid(r + 1, p.rows);
  return Dataset::Create(std::move(attrs), "secret", std::move(uids), std::move(cols));
}

}  // namespace sticky

#endif  // STICKY_GENERATORS_HPP_
