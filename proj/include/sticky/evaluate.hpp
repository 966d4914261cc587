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

#ifndef STICKY_EVALUATE_HPP_
#define STICKY_EVALUATE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sticky/bitset.hpp"
#include "sticky/dataset.hpp"
#include "sticky/error.hpp"
#include "sticky/query.hpp"

namespace sticky {

// Exact answer to a query: the matching rows in ascending row order.
struct EvalResult {
  std::size_t count = 0;
  std::vector<uint32_t> rows;
};

namespace eval_internal {

// A condition reduced to a union of half-open code ranges of one column,
// optionally complemented.
struct Compiled {
  std::size_t attr = 0;
  const Column* column = nullptr;
  std::vector<std::pair<uint32_t, uint32_t>> ranges;
  bool negate = false;
  std::size_t positive_codes = 0;
  std::size_t matches = 0;

  bool contains(uint32_t code) const {
    bool in = false;
    for (const auto& [lo, hi] : ranges) {
      if (code < lo) break;
      if (code < hi) {
        in = true;
        break;
      }
    }
    return in != negate;
  }
};

inline void check_types(const Condition& c, const Column& col) {
  for (const auto& v : c.operands()) {
    if (v.is_numeric() != (col.kind != ValueKind::kText)) {
      throw EvalError("type mismatch in '" + canonical_string(c) + "': attribute '" +
                      c.attribute() + "' is " + to_string(col.kind) + ", literal is " +
                      to_string(v.kind()));
    }
  }
}

inline Compiled compile(const Dataset& ds, const Condition& c) {
  Compiled out;
  out.attr = ds.require_attribute(c.attribute());
  out.column = &ds.column(out.attr);
  const Column& col = *out.column;
  check_types(c, col);
  const auto d = static_cast<uint32_t>(col.distinct());
  auto add = [&](std::size_t lo, std::size_t hi) {
    if (lo < hi) out.ranges.emplace_back(static_cast<uint32_t>(lo), static_cast<uint32_t>(hi));
  };
  switch (c.op()) {
    case Comparator::kNeq:
      out.negate = true;
      [[fallthrough]];
    case Comparator::kEq:
      if (auto code = col.code_of(c.operand())) add(*code, *code + 1);
      break;
    case Comparator::kLe:
      add(0, col.upper_bound(c.operand()));
      break;
    case Comparator::kLt:
      add(0, col.lower_bound(c.operand()));
      break;
    case Comparator::kGe:
      add(col.lower_bound(c.operand()), d);
      break;
    case Comparator::kGt:
      add(col.upper_bound(c.operand()), d);
      break;
    case Comparator::kNotIn:
      out.negate = true;
      [[fallthrough]];
    case Comparator::kIn: {
      std::vector<uint32_t> codes;
      for (const auto& v : c.operands()) {
        if (auto code = col.code_of(v)) codes.push_back(*code);
      }
      std::sort(codes.begin(), codes.end());
      codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
      for (uint32_t code : codes) {
        if (!out.ranges.empty() && out.ranges.back().second == code) {
          ++out.ranges.back().second;
        } else {
          out.ranges.emplace_back(code, code + 1);
        }
      }
      break;
    }
  }
  std::size_t positive_rows = 0;
  for (const auto& [lo, hi] : out.ranges) {
    positive_rows += col.rows_in(lo, hi);
    out.positive_codes += hi - lo;
  }
  out.matches = out.negate ? ds.size() - positive_rows : positive_rows;
  return out;
}

// Rows matching `c` before complementing, as a bitset.
inline RowBitset positive_set(const Compiled& c, std::size_t n) {
  const Column& col = *c.column;
  RowBitset out(n);
  if (col.has_bitsets()) {
    for (const auto& [lo, hi] : c.ranges) {
      for (uint32_t code = lo; code < hi; ++code) out |= col.bitsets[code];
    }
  } else {
    for (const auto& [lo, hi] : c.ranges) {
      for (uint32_t code = lo; code < hi; ++code) {
        for (uint32_t r : col.postings[code]) out.set(r);
      }
    }
  }
  return out;
}

inline double bitset_cost(const Compiled& c, std::size_t n) {
  const double words = static_cast<double>((n + 63) / 64);
  if (c.column->has_bitsets()) return words * static_cast<double>(c.positive_codes + 1);
  const double positive = static_cast<double>(c.negate ? n - c.matches : c.matches);
  return words + positive;
}

}  // namespace eval_internal

// Evaluates the conjunction exactly. Throws EvalError for unknown attributes
// or literal/attribute kind mismatches.
inline EvalResult evaluate(const Dataset& ds, const Query& query) {
  using eval_internal::Compiled;
  std::vector<Compiled> conds;
  conds.reserve(query.size());
  for (const auto& c : query.conditions()) conds.push_back(eval_internal::compile(ds, c));

  EvalResult result;
  const std::size_t n = ds.size();
  std::size_t driver = 0;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    if (conds[i].matches == 0) return result;
    if (conds[i].matches < conds[driver].matches) driver = i;
  }
  const Compiled& d = conds[driver];

  const double m = static_cast<double>(conds.size());
  const double candidate_cost = 2.0 * m * static_cast<double>(d.negate ? n : d.matches);
  double bits_cost = 0;
  for (const auto& c : conds) bits_cost += eval_internal::bitset_cost(c, n);

  if (candidate_cost <= bits_cost) {
    auto keep = [&](uint32_t r) {
      for (std::size_t i = 0; i < conds.size(); ++i) {
        if (i != driver && !conds[i].contains(conds[i].column->codes[r])) return false;
      }
      return true;
    };
    if (d.negate) {
      for (uint32_t r = 0; r < n; ++r) {
        if (d.contains(d.column->codes[r]) && keep(r)) result.rows.push_back(r);
      }
    } else {
      std::size_t codes = 0;
      for (const auto& [lo, hi] : d.ranges) {
        for (uint32_t code = lo; code < hi; ++code, ++codes) {
          for (uint32_t r : d.column->postings[code]) {
            if (keep(r)) result.rows.push_back(r);
          }
        }
      }
      if (codes > 1) std::sort(result.rows.begin(), result.rows.end());
    }
  } else {
    RowBitset acc(n, true);
    for (const auto& c : conds) {
      RowBitset p = eval_internal::positive_set(c, n);
      if (c.negate) {
        acc.and_not(p);
      } else {
        acc &= p;
      }
    }
    result.rows.reserve(acc.count());
    acc.for_each([&](std::size_t r) { result.rows.push_back(static_cast<uint32_t>(r)); });
  }
  result.count = result.rows.size();
  return result;
}

// The query set as uids in ascending order.
inline std::vector<std::string> query_set_uids(const Dataset& ds, const EvalResult& r) {
  std::vector<std::string> out;
  out.reserve(r.rows.size());
  for (uint32_t row : r.rows) out.push_back(ds.uid(row));
  std::sort(out.begin(), out.end());
  return out;
}

// Straightforward row-at-a-time evaluation; used as a test oracle.
inline EvalResult evaluate_naive(const Dataset& ds, const Query& query) {
  EvalResult result;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    bool ok = true;
    for (const auto& c : query.conditions()) {
      const std::size_t a = ds.require_attribute(c.attribute());
      eval_internal::check_types(c, ds.column(a));
      const Value& v = ds.value(r, a);
      bool m = false;
      switch (c.op()) {
        case Comparator::kEq:
          m = compare(v, c.operand()) == 0;
          break;
        case Comparator::kNeq:
          m = compare(v, c.operand()) != 0;
          break;
        case Comparator::kLe:
          m = compare(v, c.operand()) <= 0;
          break;
        case Comparator::kLt:
          m = compare(v, c.operand()) < 0;
          break;
        case Comparator::kGe:
          m = compare(v, c.operand()) >= 0;
          break;
        case Comparator::kGt:
          m = compare(v, c.operand()) > 0;
          break;
        case Comparator::kIn:
        case Comparator::kNotIn:
          for (const auto& o : c.operands()) m = m || compare(v, o) == 0;
          if (c.op() == Comparator::kNotIn) m = !m;
          break;
      }
      if (!m) {
        ok = false;
        break;
      }
    }
    if (ok) result.rows.push_back(static_cast<uint32_t>(r));
  }
  result.count = result.rows.size();
  return result;
}

}  // namespace sticky

#endif  // STICKY_EVALUATE_HPP_
