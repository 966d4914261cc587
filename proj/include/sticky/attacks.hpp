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

#ifndef STICKY_ATTACKS_HPP_
#define STICKY_ATTACKS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sticky/error.hpp"
#include "sticky/interface.hpp"
#include "sticky/query.hpp"
#include "sticky/random.hpp"
#include "sticky/schema.hpp"
#include "sticky/stats.hpp"
#include "sticky/value.hpp"

namespace sticky {

// x^(A): known attribute values of the victim, keyed by attribute name.
using Restricted = std::map<std::string, Value>;

// What the attacker knows: names A*, values x^(A*), the secret attribute and
// the probed value v.
struct BackgroundKnowledge {
  std::vector<std::string> attrs;
  Restricted values;
  std::string secret;
  int target_value = 1;

  void validate() const {
    if (attrs.empty()) throw InvalidArgument("background knowledge needs at least one attribute");
    if (target_value != 0 && target_value != 1) {
      throw InvalidArgument("target value must be 0 or 1");
    }
    for (const auto& a : attrs) {
      if (a == secret) throw InvalidArgument("the secret cannot be a known attribute");
      if (!values.count(a)) throw InvalidArgument("missing known value for '" + a + "'");
    }
  }
};

enum class Verdict { kTrue, kFalse, kNonAttackable, kNoSamples };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "True";
    case Verdict::kFalse:
      return "False";
    case Verdict::kNonAttackable:
      return "NonAttackable";
    case Verdict::kNoSamples:
      return "NoSamples";
  }
  return "?";
}

struct SubsetUsed {
  std::vector<std::string> attrs;  // A (differential) or A' (cloning)
  std::optional<std::string> u;
};

struct AttackOutcome {
  Verdict verdict = Verdict::kNonAttackable;
  std::size_t queries_issued = 0;
  std::optional<SubsetUsed> subset;
  // Secret value implied by the verdict, when there is one.
  std::optional<int> inferred;
};

namespace attack_internal {

inline Verdict verdict_of(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }

inline const Value& known(const Restricted& x, const std::string& a) {
  auto it = x.find(a);
  if (it == x.end()) throw InvalidArgument("missing known value for '" + a + "'");
  return it->second;
}

// Uniform random distinct subsets of `pool` of size k, at most `limit` of
// them; all of them, shuffled, when there are no more than `limit`.
inline std::vector<std::vector<std::string>> draw_subsets(const std::vector<std::string>& pool,
                                                          std::size_t k, std::size_t limit,
                                                          Rng& rng) {
  const std::size_t n = pool.size();
  std::vector<std::vector<std::string>> out;
  if (k > n) return out;
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total = total * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (total <= static_cast<double>(limit)) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      std::vector<std::string> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) s.push_back(pool[i]);
      }
      out.push_back(std::move(s));
    } while (std::next_permutation(pick.begin(), pick.end()));
    rng.shuffle(std::span(out));
    return out;
  }
  std::set<std::vector<std::size_t>> seen;
  while (out.size() < limit) {
    auto idx = rng.sample_indices(n, k);
    if (!seen.insert(idx).second) continue;
    std::vector<std::string> s;
    for (std::size_t i : idx) s.push_back(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// Distinct (A', u) draws with |A'| = k - 1 and u in A* \ A'.
inline std::vector<std::pair<std::vector<std::string>, std::string>> draw_pairs(
    const std::vector<std::string>& pool, std::size_t k, std::size_t limit, Rng& rng) {
  const std::size_t n = pool.size();
  std::vector<std::pair<std::vector<std::string>, std::string>> out;
  if (k == 0 || k > n) return out;
  double total = static_cast<double>(k);
  for (std::size_t i = 0; i < k; ++i) {
    total = total * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  auto split = [&](const std::vector<std::string>& subset, std::size_t ui) {
    std::vector<std::string> pinned;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i != ui) pinned.push_back(subset[i]);
    }
    return std::make_pair(std::move(pinned), subset[ui]);
  };
  if (total <= static_cast<double>(limit)) {
    for (const auto& s : draw_subsets(pool, k, limit, rng)) {
      for (std::size_t ui = 0; ui < s.size(); ++ui) out.push_back(split(s, ui));
    }
    rng.shuffle(std::span(out));
    return out;
  }
  std::set<std::pair<std::vector<std::size_t>, std::size_t>> seen;
  while (out.size() < limit) {
    auto idx = rng.sample_indices(n, k);
    const auto ui = static_cast<std::size_t>(rng.below(k));
    if (!seen.emplace(idx, ui).second) continue;
    std::vector<std::string> s;
    for (std::size_t i : idx) s.push_back(pool[i]);
    out.push_back(split(s, ui));
  }
  return out;
}

}  // namespace attack_internal

// ---------------------------------------------------------------------------
// Differential attack.

// Q_j (negated = false) drops attribute j of A; Q'_j (negated = true) puts
// a_j <> x_j in its place. Both end with s = secret_value. j is 1-based.
inline Query build_attack_queries_differential(const std::vector<std::string>& attrs,
                                               const Restricted& x, const std::string& secret,
                                               std::size_t j, bool negated, int secret_value) {
  if (j < 1 || j > attrs.size()) throw InvalidArgument("j out of range");
  std::vector<Condition> conds;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const auto cond = Condition::Eq(attrs[i], attack_internal::known(x, attrs[i]));
    if (i + 1 != j) {
      conds.push_back(cond);
    } else if (negated) {
      conds.push_back(negate_eq(cond));
    }
  }
  conds.push_back(Condition::Eq(secret, Value::Integer(secret_value)));
  return Query(std::move(conds));
}

// P_j - P'_j: P_j is Q_j plus a_j <= x_j, P'_j is Q'_j with a_j < x_j in
// place of a_j <> x_j (>= and > when inverted). nullopt when either answer
// is zero. Issues 2 queries.
inline std::optional<double> augment_samples_inequality(QueryInterface& answerer,
                                                        const std::vector<std::string>& attrs,
                                                        const Restricted& x,
                                                        const std::string& secret, std::size_t j,
                                                        int secret_value, bool inverted = false) {
  if (j < 1 || j > attrs.size()) throw InvalidArgument("j out of range");
  const std::string& aj = attrs[j - 1];
  const Value& xj = attack_internal::known(x, aj);
  if (!xj.is_numeric()) {
    throw InvalidArgument("attribute '" + aj + "' is not ordered; inequality samples need numbers");
  }
  std::vector<Condition> p, pp;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i + 1 == j) {
      p.push_back(inverted ? Condition::Ge(aj, xj) : Condition::Le(aj, xj));
      pp.push_back(inverted ? Condition::Gt(aj, xj) : Condition::Lt(aj, xj));
    } else {
      auto c = Condition::Eq(attrs[i], attack_internal::known(x, attrs[i]));
      p.push_back(c);
      pp.push_back(std::move(c));
    }
  }
  const auto s = Condition::Eq(secret, Value::Integer(secret_value));
  p.push_back(s);
  pp.push_back(s);
  const double a = answerer.ask(Query(std::move(p)));
  const double b = answerer.ask(Query(std::move(pp)));
  if (a > 0 && b > 0) return a - b;
  return std::nullopt;
}

struct DifferentialOptions {
  // Extra samples from inequality partitions (and their inverted forms).
  bool inequality_samples = false;
};

// Verdict True iff x^(s) = 1. Issues 4|A| queries (8|A| more with
// inequality samples on).
inline AttackOutcome differential_attack(QueryInterface& answerer,
                                         const std::vector<std::string>& attrs, const Restricted& x,
                                         const std::string& secret,
                                         const DifferentialOptions& opts = {}) {
  if (attrs.empty()) throw InvalidArgument("differential attack needs at least one attribute");
  CountingInterface counter(answerer);
  SampleSet base, extra;
  for (std::size_t j = 1; j <= attrs.size(); ++j) {
    for (int sv = 0; sv < 2; ++sv) {
      const double a =
          counter.ask(build_attack_queries_differential(attrs, x, secret, j, false, sv));
      const double b =
          counter.ask(build_attack_queries_differential(attrs, x, secret, j, true, sv));
      if (a > 0 && b > 0) (sv == 0 ? base.q_samples : base.r_samples).push_back(a - b);
    }
  }
  if (opts.inequality_samples) {
    for (std::size_t j = 1; j <= attrs.size(); ++j) {
      if (!attack_internal::known(x, attrs[j - 1]).is_numeric()) continue;
      for (bool inv : {false, true}) {
        for (int sv = 0; sv < 2; ++sv) {
          if (auto d = augment_samples_inequality(counter, attrs, x, secret, j, sv, inv)) {
            (sv == 0 ? extra.q_samples : extra.r_samples).push_back(*d);
          }
        }
      }
    }
  }
  AttackOutcome out;
  out.queries_issued = counter.count();
  out.subset = SubsetUsed{attrs, std::nullopt};
  if (base.empty() && extra.empty()) {
    out.verdict = Verdict::kNoSamples;
    return out;
  }
  const int k = static_cast<int>(attrs.size());
  const double llr = log_likelihood_ratio(base, GaussianHypothesisPair::ForK(k)) +
                     log_likelihood_ratio(extra, GaussianHypothesisPair::InequalityForK(k));
  const bool one = llr >= 0;
  out.verdict = attack_internal::verdict_of(one);
  out.inferred = one ? 1 : 0;
  return out;
}

// Oracle for the uniqueness assumption: is the victim unique on these attributes?
using UniqueOracle = std::function<bool(const std::vector<std::string>&)>;

struct ExplorationOptions {
  std::size_t iterations = 100;
  uint64_t seed = 1;
};

// Tries subsets of A* from size |A*| down to 1 and attacks the first one the
// oracle calls unique that yields samples.
inline AttackOutcome full_differential_attack(QueryInterface& answerer,
                                              const UniqueOracle& unique_oracle,
                                              const std::vector<std::string>& attrs,
                                              const Restricted& x, const std::string& secret,
                                              const ExplorationOptions& explore = {},
                                              const DifferentialOptions& opts = {}) {
  if (attrs.empty()) throw InvalidArgument("full differential attack needs at least one attribute");
  CountingInterface counter(answerer);
  Rng rng(explore.seed);
  for (std::size_t k = attrs.size(); k >= 1; --k) {
    for (const auto& subset : attack_internal::draw_subsets(attrs, k, explore.iterations, rng)) {
      if (!unique_oracle(subset)) continue;
      AttackOutcome r = differential_attack(counter, subset, x, secret, opts);
      if (r.verdict == Verdict::kNoSamples) continue;
      r.queries_issued = counter.count();
      return r;
    }
  }
  AttackOutcome out;
  out.queries_issued = counter.count();
  return out;
}

// ---------------------------------------------------------------------------
// Cloning attack.

// `count` conditions "pinned <> b_j" with distinct b_j != victim_value. In
// domain mode the b_j are the domain values nearest to the victim's value,
// alternating below and above; any shortfall, and every value in
// out-of-domain mode, is synthesized outside the domain.
inline std::vector<Condition> generate_dummy_conditions(const std::vector<Value>& domain,
                                                        const std::string& pinned_attr,
                                                        const Value& victim_value,
                                                        std::size_t count, bool in_domain = true) {
  if (count < 2) throw InvalidArgument("at least two dummy conditions are needed");
  std::vector<Value> picks;
  if (in_domain && !domain.empty()) {
    auto less = [](const Value& a, const Value& b) { return compare(a, b) < 0; };
    const auto lo_it = std::lower_bound(domain.begin(), domain.end(), victim_value, less);
    auto below = lo_it - domain.begin() - 1;
    auto above = lo_it - domain.begin();
    if (above < static_cast<std::ptrdiff_t>(domain.size()) &&
        compare(domain[above], victim_value) == 0) {
      ++above;
    }
    bool take_below = true;
    while (picks.size() < count &&
           (below >= 0 || above < static_cast<std::ptrdiff_t>(domain.size()))) {
      if ((take_below && below >= 0) || above >= static_cast<std::ptrdiff_t>(domain.size())) {
        picks.push_back(domain[below--]);
      } else {
        picks.push_back(domain[above++]);
      }
      take_below = !take_below;
    }
  }
  auto taken = [&](const Value& v) {
    if (compare(v, victim_value) == 0) return true;
    for (const auto& d : domain) {
      if (compare(d, v) == 0) return true;
    }
    for (const auto& p : picks) {
      if (compare(p, v) == 0) return true;
    }
    return false;
  };
  for (int64_t i = 1; picks.size() < count; ++i) {
    Value v;
    switch (victim_value.kind()) {
      case ValueKind::kInteger: {
        int64_t top = victim_value.as_integer();
        for (const auto& d : domain) {
          top = std::max<int64_t>(top, static_cast<int64_t>(d.numeric()));
        }
        v = Value::Integer(top + i);
        break;
      }
      case ValueKind::kDecimal: {
        double top = victim_value.as_decimal();
        for (const auto& d : domain) top = std::max(top, static_cast<double>(d.numeric()));
        v = Value::Decimal(std::floor(top) + static_cast<double>(i));
        break;
      }
      case ValueKind::kText:
        v = Value::Text(victim_value.as_text() + "#" + std::to_string(i));
        break;
    }
    if (!taken(v)) picks.push_back(std::move(v));
  }
  std::vector<Condition> out;
  for (auto& v : picks) out.push_back(Condition::Neq(pinned_attr, std::move(v)));
  return out;
}

// (A', u) plus everything needed to phrase the cloning queries.
struct CloningSetup {
  std::vector<std::string> pinned;  // A'
  std::string u;
  Restricted x;
  std::vector<Condition> delta;
  std::string secret;
  int v = 1;
};

// Dummies for a draw: in-domain on the attribute of A' with the largest
// domain (ties to the smaller name); out-of-domain on u when A' is empty.
inline std::vector<Condition> dummies_for(const Schema& schema,
                                          const std::vector<std::string>& pinned,
                                          const std::string& u, const Restricted& x,
                                          std::size_t count) {
  if (pinned.empty()) {
    return generate_dummy_conditions(schema.at(u).domain, u, attack_internal::known(x, u), count,
                                     false);
  }
  std::string best = pinned.front();
  for (const auto& a : pinned) {
    const auto da = schema.at(a).domain.size(), db = schema.at(best).domain.size();
    if (da > db || (da == db && a < best)) best = a;
  }
  return generate_dummy_conditions(schema.at(best).domain, best, attack_internal::known(x, best),
                                   count, true);
}

// Q_j (with_u = false) or Q'_j (with_u = true); j is 0-based here.
inline Query build_cloning_query(const CloningSetup& s, std::size_t j, bool with_u) {
  std::vector<Condition> conds;
  for (const auto& a : s.pinned) conds.push_back(Condition::Eq(a, attack_internal::known(s.x, a)));
  for (std::size_t l = 0; l < s.delta.size(); ++l) {
    if (l != j) conds.push_back(s.delta[l]);
  }
  if (with_u) conds.push_back(Condition::Neq(s.u, attack_internal::known(s.x, s.u)));
  conds.push_back(Condition::Neq(s.secret, Value::Integer(s.v)));
  return Query(std::move(conds));
}

// Answers to the 2|Delta| cloning queries, shared by the suppression test
// and the inference.
struct CloningProbe {
  std::vector<double> q;
  std::vector<double> q_prime;
};

inline CloningProbe probe_cloning(QueryInterface& answerer, const CloningSetup& s) {
  if (s.delta.size() < 2) throw InvalidArgument("at least two dummy conditions are needed");
  CloningProbe p;
  for (std::size_t j = 0; j < s.delta.size(); ++j) {
    p.q.push_back(answerer.ask(build_cloning_query(s, j, false)));
    p.q_prime.push_back(answerer.ask(build_cloning_query(s, j, true)));
  }
  return p;
}

inline bool no_bucket_suppression(const CloningProbe& p) {
  const bool any_q = std::any_of(p.q.begin(), p.q.end(), [](double a) { return a > 0; });
  const bool any_qp =
      std::any_of(p.q_prime.begin(), p.q_prime.end(), [](double a) { return a > 0; });
  return any_q && any_qp;
}

// True iff S^2 of (q_j - q'_j) is at most sigma_star, i.e. x^(s) = v.
inline bool cloning_verdict(const CloningProbe& p, double sigma_star) {
  std::vector<double> d(p.q.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = p.q[j] - p.q_prime[j];
  return sample_variance(d) <= sigma_star;
}

// Issues 2|Delta| queries.
inline bool cloning_attack(QueryInterface& answerer, const CloningSetup& s, double sigma_star) {
  return cloning_verdict(probe_cloning(answerer, s), sigma_star);
}

// Issues the same 2|Delta| queries as cloning_attack.
inline bool no_bucket_suppression_test(QueryInterface& answerer, const CloningSetup& s) {
  return no_bucket_suppression(probe_cloning(answerer, s));
}

// count(A' = x^(A') and u = x^(u)) == 0. One query.
inline bool value_unique_test(QueryInterface& answerer, const std::vector<std::string>& pinned,
                              const std::string& u, const Restricted& x) {
  std::vector<Condition> conds;
  for (const auto& a : pinned) conds.push_back(Condition::Eq(a, attack_internal::known(x, a)));
  conds.push_back(Condition::Eq(u, attack_internal::known(x, u)));
  return answerer.ask(Query(std::move(conds))) == 0;
}

struct CloningOptions {
  std::size_t delta = 10;
  double sigma_star = 0.7;
  std::size_t iterations = 100;
  uint64_t seed = 1;
};

namespace attack_internal {

inline AttackOutcome finish_cloning(const CloningSetup& s, bool equal, std::size_t queries) {
  AttackOutcome out;
  out.verdict = verdict_of(equal);
  out.inferred = equal ? s.v : 1 - s.v;
  out.queries_issued = queries;
  out.subset = SubsetUsed{s.pinned, s.u};
  return out;
}

// Runs `attempt` over (A', u) draws from |A*| down to 1 until it returns
// a verdict.
template <typename Attempt>
AttackOutcome explore_pairs(const BackgroundKnowledge& bk, const CloningOptions& opts,
                            CountingInterface& counter, Attempt&& attempt) {
  Rng rng(opts.seed);
  for (std::size_t k = bk.attrs.size(); k >= 1; --k) {
    for (auto& [pinned, u] : draw_pairs(bk.attrs, k, opts.iterations, rng)) {
      if (auto r = attempt(pinned, u)) {
        r->queries_issued = counter.count();
        return *r;
      }
    }
  }
  AttackOutcome out;
  out.queries_issued = counter.count();
  return out;
}

}  // namespace attack_internal

// Subset exploration with the suppression and value-uniqueness checks before
// each inference. Verdict True iff x^(s) = v.
inline AttackOutcome full_cloning_attack(QueryInterface& answerer, const Schema& schema,
                                         const BackgroundKnowledge& bk,
                                         const CloningOptions& opts = {}) {
  bk.validate();
  CountingInterface counter(answerer);
  return attack_internal::explore_pairs(
      bk, opts, counter,
      [&](const std::vector<std::string>& pinned,
          const std::string& u) -> std::optional<AttackOutcome> {
        auto delta = dummies_for(schema, pinned, u, bk.values, opts.delta);
        CloningSetup s{pinned, u, bk.values, std::move(delta), bk.secret, bk.target_value};
        const CloningProbe probe = probe_cloning(counter, s);
        if (!no_bucket_suppression(probe)) return std::nullopt;
        if (!value_unique_test(counter, pinned, u, bk.values)) return std::nullopt;
        return attack_internal::finish_cloning(s, cloning_verdict(probe, opts.sigma_star), 0);
      });
}

// Probes both v = 0 and v = 1 and answers only when the two inferences
// agree; otherwise keeps exploring. Verdict True iff x^(s) = 1.
inline AttackOutcome double_cloning_attack(QueryInterface& answerer, const Schema& schema,
                                           const BackgroundKnowledge& bk,
                                           const CloningOptions& opts = {}) {
  bk.validate();
  CountingInterface counter(answerer);
  return attack_internal::explore_pairs(
      bk, opts, counter,
      [&](const std::vector<std::string>& pinned,
          const std::string& u) -> std::optional<AttackOutcome> {
        auto delta = dummies_for(schema, pinned, u, bk.values, opts.delta);
        CloningSetup s0{pinned, u, bk.values, std::move(delta), bk.secret, 0};
        const CloningProbe p0 = probe_cloning(counter, s0);
        if (!no_bucket_suppression(p0)) return std::nullopt;
        CloningSetup s1 = s0;
        s1.v = 1;
        const CloningProbe p1 = probe_cloning(counter, s1);
        if (!no_bucket_suppression(p1)) return std::nullopt;
        if (!value_unique_test(counter, pinned, u, bk.values)) return std::nullopt;
        const bool is_zero = cloning_verdict(p0, opts.sigma_star);
        const bool is_one = cloning_verdict(p1, opts.sigma_star);
        if (is_zero == is_one) return std::nullopt;
        return attack_internal::finish_cloning(s1, is_one, 0);
      });
}

// ---------------------------------------------------------------------------
// Greedy subset selection.

struct GreedySelection {
  std::vector<std::string> pinned;  // A'
  std::string u;
  double population = 0;  // N
  std::map<std::string, double> rho;
};

// Pure selection rule. Sort by (rho desc, name asc); u is the last entry; A'
// takes entries from the front while rho_u * prod(rho) > 1/N.
inline GreedySelection select_subset_from_fractions(const std::map<std::string, double>& rho,
                                                    double population) {
  if (rho.size() < 2) throw InvalidArgument("greedy selection needs at least two attributes");
  if (!(population > 0)) throw Error("greedy selection: population estimate is not positive");
  bool any = false;
  for (const auto& [a, r] : rho) any = any || r > 0;
  if (!any) throw Error("greedy selection: every fraction is zero");
  std::vector<std::pair<std::string, double>> order(rho.begin(), rho.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  GreedySelection out;
  out.population = population;
  out.rho = rho;
  out.u = order.back().first;
  double product = order.back().second;
  for (std::size_t i = 0; i + 1 < order.size() && product > 1.0 / population; ++i) {
    out.pinned.push_back(order[i].first);
    product *= order[i].second;
  }
  return out;
}

// Issues |A*| + 1 queries. The population count is phrased as s >= 0.
inline GreedySelection greedy_select_subset(QueryInterface& answerer,
                                            const BackgroundKnowledge& bk) {
  bk.validate();
  if (bk.attrs.size() < 2) throw InvalidArgument("greedy selection needs at least two attributes");
  const double n = answerer.ask(Query({Condition::Ge(bk.secret, Value::Integer(0))}));
  std::map<std::string, double> rho;
  for (const auto& a : bk.attrs) {
    const double c =
        answerer.ask(Query({Condition::Eq(a, attack_internal::known(bk.values, a)),
                            Condition::Neq(bk.secret, Value::Integer(bk.target_value))}));
    rho[a] = n > 0 ? c / n : 0;
  }
  return select_subset_from_fractions(rho, n);
}

// One greedy subset, then the two checks, then the inference. At most
// |A*| + 2|Delta| + 2 queries. Verdict True iff x^(s) = v.
inline AttackOutcome greedy_full_cloning_attack(QueryInterface& answerer, const Schema& schema,
                                                const BackgroundKnowledge& bk,
                                                const CloningOptions& opts = {}) {
  bk.validate();
  CountingInterface counter(answerer);
  AttackOutcome out;
  GreedySelection sel;
  try {
    sel = greedy_select_subset(counter, bk);
  } catch (const Error&) {
    out.queries_issued = counter.count();
    return out;
  }
  auto delta = dummies_for(schema, sel.pinned, sel.u, bk.values, opts.delta);
  CloningSetup s{sel.pinned, sel.u, bk.values, std::move(delta), bk.secret, bk.target_value};
  const CloningProbe probe = probe_cloning(counter, s);
  if (!no_bucket_suppression(probe) || !value_unique_test(counter, s.pinned, s.u, bk.values)) {
    out.queries_issued = counter.count();
    out.subset = SubsetUsed{s.pinned, s.u};
    return out;
  }
  return attack_internal::finish_cloning(s, cloning_verdict(probe, opts.sigma_star),
                                         counter.count());
}

}  // namespace sticky

#endif  // STICKY_ATTACKS_HPP_
