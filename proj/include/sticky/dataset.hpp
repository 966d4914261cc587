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

#ifndef STICKY_DATASET_HPP_
#define STICKY_DATASET_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "sticky/bitset.hpp"
#include "sticky/error.hpp"
#include "sticky/hash.hpp"
#include "sticky/value.hpp"

namespace sticky {

// Raw per-column input to Dataset::Create. The alternative fixes the column kind.
using ColumnData =
    std::variant<std::vector<int64_t>, std::vector<double>, std::vector<std::string>>;

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// One attribute, dictionary encoded. `dictionary` is sorted ascending with
// compare(), so every comparator reduces to a range of codes.
struct Column {
  ValueKind kind = ValueKind::kInteger;
  std::vector<Value> dictionary;
  std::vector<uint32_t> codes;
  std::vector<std::vector<uint32_t>> postings;  // rows per code, ascending
  std::vector<std::size_t> posting_prefix;      // size dictionary.size() + 1
  std::vector<RowBitset> bitsets;               // per code; empty if not indexed

  std::size_t distinct() const { return dictionary.size(); }
  bool has_bitsets() const { return !bitsets.empty(); }

  // Index of the first dictionary entry >= v.
  std::size_t lower_bound(const Value& v) const {
    auto it = std::lower_bound(dictionary.begin(), dictionary.end(), v,
                               [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    return static_cast<std::size_t>(it - dictionary.begin());
  }
  // Index of the first dictionary entry > v.
  std::size_t upper_bound(const Value& v) const {
    auto it = std::upper_bound(dictionary.begin(), dictionary.end(), v,
                               [](const Value& a, const Value& b) { return compare(a, b) < 0; });
    return static_cast<std::size_t>(it - dictionary.begin());
  }
  std::optional<uint32_t> code_of(const Value& v) const {
    std::size_t i = lower_bound(v);
    if (i < dictionary.size() && compare(dictionary[i], v) == 0) return static_cast<uint32_t>(i);
    return std::nullopt;
  }
  // Number of rows whose code lies in [lo, hi).
  std::size_t rows_in(std::size_t lo, std::size_t hi) const {
    return posting_prefix[hi] - posting_prefix[lo];
  }
};

// A record materialized by attribute name.
struct Record {
  std::string uid;
  std::map<std::string, Value> values;
};

// Immutable table: one row per user, keyed by uid, with a designated binary
// secret attribute. Safe for concurrent reads.
class Dataset {
 public:
  // Per-code bitsets are built for columns with at most this many distinct
  // values, while the running bitset memory stays under kBitsetBudgetBytes.
  static constexpr std::size_t kBitsetMaxDistinct = 512;
  static constexpr std::size_t kBitsetBudgetBytes = std::size_t{512} << 20;

  static Dataset Create(std::vector<std::string> attributes, std::string secret,
                        std::vector<std::string> uids, std::vector<ColumnData> columns) {
    Dataset ds;
    if (attributes.size() != columns.size()) {
      throw LoadError("attribute/column count mismatch");
    }
    if (uids.empty()) throw LoadError("dataset must contain at least one record");
    for (auto& a : attributes) a = lowercase(a);
    secret = lowercase(secret);
    ds.attributes_ = std::move(attributes);
    for (std::size_t i = 0; i < ds.attributes_.size(); ++i) {
      if (!ds.index_.emplace(ds.attributes_[i], i).second) {
        throw LoadError("duplicate attribute '" + ds.attributes_[i] + "'");
      }
    }
    auto sit = ds.index_.find(secret);
    if (sit == ds.index_.end()) throw LoadError("secret attribute '" + secret + "' not found");
    ds.secret_ = secret;
    ds.secret_index_ = sit->second;

    ds.uids_ = std::move(uids);
    ds.uid_hashes_.reserve(ds.uids_.size());
    ds.row_of_.reserve(ds.uids_.size());
    for (std::size_t r = 0; r < ds.uids_.size(); ++r) {
      if (!ds.row_of_.emplace(ds.uids_[r], r).second) {
        throw LoadError("duplicate uid '" + ds.uids_[r] + "' at record " + std::to_string(r + 1));
      }
      ds.uid_hashes_.push_back(hash64(ds.uids_[r]));
    }

    std::size_t bitset_bytes = 0;
    ds.columns_.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      ds.columns_.push_back(
          build_column(columns[c], ds.uids_.size(), ds.attributes_[c], bitset_bytes));
    }
    ds.check_secret();
    return ds;
  }

  std::size_t size() const { return uids_.size(); }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& secret() const { return secret_; }
  std::size_t secret_index() const { return secret_index_; }

  std::vector<std::string> non_secret_attributes() const {
    std::vector<std::string> out;
    for (const auto& a : attributes_) {
      if (a != secret_) out.push_back(a);
    }
    return out;
  }

  std::optional<std::size_t> attribute_index(std::string_view name) const {
    auto it = index_.find(lowercase(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_attribute(std::string_view name) const {
    auto i = attribute_index(name);
    if (!i) throw EvalError("unknown attribute '" + std::string(name) + "'");
    return *i;
  }

  const Column& column(std::size_t i) const { return columns_[i]; }
  const Column& column(std::string_view name) const { return columns_[require_attribute(name)]; }

  const std::string& uid(std::size_t row) const { return uids_[row]; }
  uint64_t uid_hash(std::size_t row) const { return uid_hashes_[row]; }
  std::optional<std::size_t> row_of(std::string_view uid) const {
    auto it = row_of_.find(std::string(uid));
    if (it == row_of_.end()) return std::nullopt;
    return it->second;
  }

  uint32_t code(std::size_t row, std::size_t attr) const { return columns_[attr].codes[row]; }
  const Value& value(std::size_t row, std::size_t attr) const {
    const Column& col = columns_[attr];
    return col.dictionary[col.codes[row]];
  }
  int secret_value(std::size_t row) const {
    return static_cast<int>(value(row, secret_index_).as_integer());
  }

  Record record(std::size_t row) const {
    Record rec{uids_[row], {}};
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
      rec.values.emplace(attributes_[a], value(row, a));
    }
    return rec;
  }

  // Column contents as raw data, for rebuilding modified copies.
  ColumnData column_data(std::size_t attr) const {
    const Column& col = columns_[attr];
    switch (col.kind) {
      case ValueKind::kInteger: {
        std::vector<int64_t> v(size());
        for (std::size_t r = 0; r < size(); ++r) v[r] = col.dictionary[col.codes[r]].as_integer();
        return v;
      }
      case ValueKind::kDecimal: {
        std::vector<double> v(size());
        for (std::size_t r = 0; r < size(); ++r) v[r] = col.dictionary[col.codes[r]].as_decimal();
        return v;
      }
      case ValueKind::kText: {
        std::vector<std::string> v(size());
        for (std::size_t r = 0; r < size(); ++r) v[r] = col.dictionary[col.codes[r]].as_text();
        return v;
      }
    }
    return std::vector<int64_t>{};
  }

  const std::vector<std::string>& uids() const { return uids_; }

 private:
  template <typename T>
  static void encode(const std::vector<T>& raw, Column& col) {
    std::vector<T> sorted(raw);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    col.dictionary.reserve(sorted.size());
    for (const T& v : sorted) {
      if constexpr (std::is_same_v<T, int64_t>) {
        col.dictionary.push_back(Value::Integer(v));
      } else if constexpr (std::is_same_v<T, double>) {
        col.dictionary.push_back(Value::Decimal(v));
      } else {
        col.dictionary.push_back(Value::Text(v));
      }
    }
    col.codes.resize(raw.size());
    for (std::size_t r = 0; r < raw.size(); ++r) {
      col.codes[r] = static_cast<uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), raw[r]) -
                                           sorted.begin());
    }
  }

  static Column build_column(const ColumnData& data, std::size_t rows, const std::string& name,
                             std::size_t& bitset_bytes) {
    Column col;
    std::visit(
        [&](const auto& raw) {
          using T = typename std::decay_t<decltype(raw)>::value_type;
          if (raw.size() != rows) {
            throw LoadError("column '" + name + "' has " + std::to_string(raw.size()) +
                            " values, expected " + std::to_string(rows));
          }
          if constexpr (std::is_same_v<T, int64_t>) {
            col.kind = ValueKind::kInteger;
          } else if constexpr (std::is_same_v<T, double>) {
            col.kind = ValueKind::kDecimal;
            for (double d : raw) {
              if (!std::isfinite(d)) {
                throw LoadError("column '" + name + "' has a non-finite value");
              }
            }
          } else {
            col.kind = ValueKind::kText;
          }
          if constexpr (std::is_same_v<T, double>) {
            // Fold -0.0 into 0.0 before deduplication.
            std::vector<double> folded(raw);
            for (double& d : folded) d = d == 0.0 ? 0.0 : d;
            encode(folded, col);
          } else {
            encode(raw, col);
          }
        },
        data);

    col.postings.assign(col.dictionary.size(), {});
    for (std::size_t r = 0; r < rows; ++r) {
      col.postings[col.codes[r]].push_back(static_cast<uint32_t>(r));
    }
    col.posting_prefix.assign(col.dictionary.size() + 1, 0);
    for (std::size_t c = 0; c < col.dictionary.size(); ++c) {
      col.posting_prefix[c + 1] = col.posting_prefix[c] + col.postings[c].size();
    }

    const std::size_t cost = col.dictionary.size() * ((rows + 63) / 64) * sizeof(uint64_t);
    if (col.dictionary.size() <= kBitsetMaxDistinct && bitset_bytes + cost <= kBitsetBudgetBytes) {
      bitset_bytes += cost;
      col.bitsets.assign(col.dictionary.size(), RowBitset(rows));
      for (std::size_t r = 0; r < rows; ++r) col.bitsets[col.codes[r]].set(r);
    }
    return col;
  }

  void check_secret() const {
    const Column& col = columns_[secret_index_];
    if (col.kind != ValueKind::kInteger) {
      throw LoadError("secret attribute '" + secret_ + "' must be binary (0/1)");
    }
    for (std::size_t r = 0; r < size(); ++r) {
      int64_t v = col.dictionary[col.codes[r]].as_integer();
      if (v != 0 && v != 1) {
        throw LoadError("non-binary secret value " + std::to_string(v) + " at record " +
                        std::to_string(r + 1) + " (uid '" + uids_[r] + "')");
      }
    }
  }

  std::vector<std::string> attributes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string secret_;
  std::size_t secret_index_ = 0;
  std::vector<std::string> uids_;
  std::vector<uint64_t> uid_hashes_;
  std::unordered_map<std::string, std::size_t> row_of_;
  std::vector<Column> columns_;
};

// x^(A): the values of `attrs` in `record`. Throws InvalidArgument for an
// attribute the record does not carry.
inline std::map<std::string, Value> restrict(const Record& record,
                                             std::span<const std::string> attrs) {
  std::map<std::string, Value> out;
  for (const auto& a : attrs) {
    auto it = record.values.find(lowercase(a));
    if (it == record.values.end()) throw InvalidArgument("unknown attribute '" + a + "'");
    out.emplace(it->first, it->second);
  }
  return out;
}

// Overload for an already restricted record (restrict(restrict(x, A), B)).
inline std::map<std::string, Value> restrict(const std::map<std::string, Value>& restricted,
                                             std::span<const std::string> attrs) {
  return restrict(Record{"", restricted}, attrs);
}

namespace csv {

// Splits CSV text into rows of fields. Supports quoted fields with "" escapes
// and LF or CRLF line endings. Each row carries its 1-based line number.
struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

inline std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  row.line = 1;
  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (!(row.fields.empty() && field.empty() && !field_started)) {
      end_field();
      rows.push_back(std::move(row));
    }
    row = Row{};
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;  // a trailing comma still opens an (empty) field
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        row.line = line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw LoadError("unterminated quoted field at line " + std::to_string(line));
  end_row();
  return rows;
}

inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace csv

// Loads a UTF-8 CSV with a header row. Columns are typed per column: integer
// if every cell parses as an integer, decimal if every cell parses as a
// decimal, text otherwise. Empty cells are rejected.
inline Dataset load_csv_text(std::string_view text, std::string_view uid_column,
                             std::string_view secret_column) {
  auto rows = csv::parse(text);
  if (rows.empty()) throw LoadError("missing header row");
  std::vector<std::string> header;
  for (const auto& h : rows[0].fields) header.push_back(lowercase(h));
  const std::string uid_name = lowercase(uid_column);
  const std::string secret_name = lowercase(secret_column);

  auto find = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw LoadError("missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t uid_col = find(uid_name);
  find(secret_name);
  if (rows.size() < 2) throw LoadError("dataset must contain at least one record");

  std::vector<std::vector<std::string>> cells(header.size());
  std::vector<std::string> uids;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.fields.size() != header.size()) {
      throw LoadError("row at line " + std::to_string(r.line) + " has " +
                      std::to_string(r.fields.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (r.fields[c].empty()) {
        throw LoadError("missing value for column '" + header[c] + "' at line " +
                        std::to_string(r.line));
      }
    }
    if (!seen.emplace(r.fields[uid_col], r.line).second) {
      throw LoadError("duplicate uid '" + r.fields[uid_col] + "' at line " +
                      std::to_string(r.line));
    }
    uids.push_back(r.fields[uid_col]);
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c != uid_col) cells[c].push_back(r.fields[c]);
    }
  }

  std::vector<std::string> attributes;
  std::vector<ColumnData> columns;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == uid_col) continue;
    attributes.push_back(header[c]);
    auto& col = cells[c];
    bool all_int = true, all_dec = true;
    for (const auto& s : col) {
      if (all_int && !parse_integer(s)) all_int = false;
      if (!all_int && all_dec && !parse_decimal(s)) {
        all_dec = false;
        break;
      }
    }
    if (all_int) {
      std::vector<int64_t> v;
      v.reserve(col.size());
      for (const auto& s : col) v.push_back(*parse_integer(s));
      columns.emplace_back(std::move(v));
    } else if (all_dec) {
      std::vector<double> v;
      v.reserve(col.size());
      for (const auto& s : col) v.push_back(*parse_decimal(s));
      columns.emplace_back(std::move(v));
    } else {
      if (header[c] == secret_name) {
        for (std::size_t r = 0; r < col.size(); ++r) {
          if (!parse_integer(col[r])) {
            throw LoadError("non-binary secret value '" + col[r] + "' at line " +
                            std::to_string(rows[r + 1].line));
          }
        }
      }
      columns.emplace_back(std::move(col));
    }
  }
  if (header.size() > 0) {
    // Report the offending line for non-binary secrets before Create() does.
    std::size_t sc = 0;
    for (std::size_t c = 0, k = 0; c < header.size(); ++c) {
      if (c == uid_col) continue;
      if (header[c] == secret_name) sc = k;
      ++k;
    }
    if (auto* ints = std::get_if<std::vector<int64_t>>(&columns[sc])) {
      for (std::size_t r = 0; r < ints->size(); ++r) {
        if ((*ints)[r] != 0 && (*ints)[r] != 1) {
          throw LoadError("non-binary secret value " + std::to_string((*ints)[r]) + " at line " +
                          std::to_string(rows[r + 1].line));
        }
      }
    } else {
      throw LoadError("secret column '" + secret_name + "' must contain only 0 and 1");
    }
  }
  return Dataset::Create(std::move(attributes), secret_name, std::move(uids), std::move(columns));
}

inline Dataset load_csv(const std::string& path, std::string_view uid_column,
                        std::string_view secret_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_csv_text(buf.str(), uid_column, secret_column);
}

// Writes `ds` as CSV with the uid column first.
inline void write_csv(const Dataset& ds, std::ostream& out, std::string_view uid_column = "uid") {
  out << csv::quote(std::string(uid_column));
  for (const auto& a : ds.attributes()) out << ',' << csv::quote(a);
  out << '\n';
  for (std::size_t r = 0; r < ds.size(); ++r) {
    out << csv::quote(ds.uid(r));
    for (std::size_t a = 0; a < ds.attributes().size(); ++a) {
      out << ',' << csv::quote(ds.value(r, a).canonical());
    }
    out << '\n';
  }
}

}  // namespace sticky

#endif  // STICKY_DATASET_HPP_
