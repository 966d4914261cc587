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

#ifndef STICKY_UNIQUENESS_HPP_
#define STICKY_UNIQUENESS_HPP_

#include <span>
#include <string>
#include <vector>

#include "sticky/dataset.hpp"
#include "sticky/error.hpp"
#include "sticky/evaluate.hpp"
#include "sticky/query.hpp"

// Ground-truth uniqueness oracles. These read the dataset directly and are
// for the harness only; attacks receive them, if at all, as a callback.
namespace sticky {

// Rows agreeing with `row` on every attribute in `attrs` (including `row`).
inline std::vector<uint32_t> matching_rows(const Dataset& ds, std::size_t row,
                                           std::span<const std::string> attrs) {
  if (attrs.empty()) {
    std::vector<uint32_t> all(ds.size());
    for (std::size_t r = 0; r < ds.size(); ++r) all[r] = static_cast<uint32_t>(r);
    return all;
  }
  std::vector<Condition> conds;
  for (const auto& a : attrs) {
    conds.push_back(Condition::Eq(a, ds.value(row, ds.require_attribute(a))));
  }
  return evaluate(ds, Query(std::move(conds))).rows;
}

inline std::size_t row_of_record(const Dataset& ds, const Record& record) {
  auto row = ds.row_of(record.uid);
  if (!row) throw InvalidArgument("record '" + record.uid + "' is not in the dataset");
  return *row;
}

inline bool is_unique(const Dataset& ds, std::size_t row, std::span<const std::string> attrs) {
  return matching_rows(ds, row, attrs).size() == 1;
}

inline bool is_unique(const Dataset& ds, const Record& record, std::span<const std::string> attrs) {
  return is_unique(ds, row_of_record(ds, record), attrs);
}

// Every record matching on `attrs` has the same secret value as `row`.
inline bool is_value_unique(const Dataset& ds, std::size_t row,
                            std::span<const std::string> attrs) {
  const std::size_t s = ds.secret_index();
  for (const auto& a : attrs) {
    if (ds.require_attribute(a) == s) throw InvalidArgument("attrs must not contain the secret");
  }
  const int secret = ds.secret_value(row);
  for (uint32_t r : matching_rows(ds, row, attrs)) {
    if (ds.secret_value(r) != secret) return false;
  }
  return true;
}

inline bool is_value_unique(const Dataset& ds, const Record& record,
                            std::span<const std::string> attrs) {
  return is_value_unique(ds, row_of_record(ds, record), attrs);
}

// Size of the class of records matching `row` on `attrs`.
inline std::size_t value_unique_class_size(const Dataset& ds, std::size_t row,
                                           std::span<const std::string> attrs) {
  return matching_rows(ds, row, attrs).size();
}

inline std::size_t value_unique_class_size(const Dataset& ds, const Record& record,
                                           std::span<const std::string> attrs) {
  return value_unique_class_size(ds, row_of_record(ds, record), attrs);
}

}  // namespace sticky

#endif  // STICKY_UNIQUENESS_HPP_
