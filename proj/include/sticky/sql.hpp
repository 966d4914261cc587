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

#ifndef STICKY_SQL_HPP_
#define STICKY_SQL_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sticky/error.hpp"
#include "sticky/query.hpp"
#include "sticky/value.hpp"

namespace sticky {
namespace sql_internal {

enum class Tok { kIdent, kQuotedIdent, kString, kNumber, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
    } else if (c == '\'' || c == '"') {
      const char q = c;
      std::string text;
      ++i;
      for (;;) {
        if (i >= s.size()) throw ParseError("unterminated quoted literal", start);
        if (s[i] == q) {
          if (i + 1 < s.size() && s[i + 1] == q) {
            text += q;
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        text += s[i++];
      }
      out.push_back({q == '\'' ? Tok::kString : Tok::kQuotedIdent, std::move(text), start});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
               ((c == '-' || c == '+') && i + 1 < s.size() &&
                (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '.'))) {
      ++i;
      while (i < s.size()) {
        char d = s[i];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          ++i;
        } else if ((d == 'e' || d == 'E') && i + 1 < s.size()) {
          ++i;
          if (s[i] == '+' || s[i] == '-') ++i;
        } else {
          break;
        }
      }
      out.push_back({Tok::kNumber, std::string(s.substr(start, i - start)), start});
    } else {
      static constexpr std::string_view kTwo[] = {"<>", "!=", "<=", ">="};
      std::string sym(1, c);
      for (auto two : kTwo) {
        if (s.substr(i, 2) == two) sym = std::string(two);
      }
      static constexpr std::string_view kOne = "=<>(),*;";
      if (sym.size() == 1 && kOne.find(c) == std::string_view::npos) {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      i += sym.size();
      out.push_back({Tok::kSymbol, std::move(sym), start});
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

inline bool keyword(const Token& t, std::string_view kw) {
  return t.kind == Tok::kIdent && lowercase(t.text) == kw;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Query parse() {
    expect_kw("select");
    expect_kw("count");
    expect_sym("(");
    expect_sym("*");
    expect_sym(")");
    expect_kw("from");
    const Token& table = next();
    if (table.kind != Tok::kIdent && table.kind != Tok::kQuotedIdent) {
      throw ParseError("expected table name", table.pos);
    }
    if (peek().kind == Tok::kSymbol && peek().text == "(") {
      throw ParseError("subqueries and table functions are not supported", peek().pos);
    }
    expect_kw("where");
    std::vector<Condition> conds;
    conds.push_back(condition());
    for (;;) {
      const Token& t = peek();
      if (keyword(t, "and")) {
        ++at_;
        conds.push_back(condition());
      } else if (keyword(t, "or")) {
        throw ParseError("OR is not supported", t.pos);
      } else if (keyword(t, "group") || keyword(t, "order") || keyword(t, "having") ||
                 keyword(t, "limit")) {
        throw ParseError("'" + t.text + "' clauses are not supported", t.pos);
      } else {
        break;
      }
    }
    if (peek().kind == Tok::kSymbol && peek().text == ";") ++at_;
    if (peek().kind != Tok::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    try {
      return Query(std::move(conds));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() {
    const Token& t = toks_[at_];
    if (t.kind != Tok::kEnd) ++at_;
    return t;
  }
  void expect_kw(std::string_view kw) {
    const Token& t = next();
    if (!keyword(t, kw)) {
      throw ParseError(
          "expected '" + std::string(kw) + "'" +
              (t.kind == Tok::kEnd ? std::string(" at end of input") : ", got '" + t.text + "'"),
          t.pos);
    }
  }
  void expect_sym(std::string_view sym) {
    const Token& t = next();
    if (t.kind != Tok::kSymbol || t.text != sym) {
      throw ParseError("expected '" + std::string(sym) + "'", t.pos);
    }
  }

  Value literal() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kString:
        return Value::Text(t.text);
      case Tok::kNumber: {
        std::string_view body = t.text;
        if (!body.empty() && body[0] == '+') body.remove_prefix(1);
        if (body.find_first_of(".eE") == std::string_view::npos) {
          if (auto i = parse_integer(body)) return Value::Integer(*i);
          throw ParseError("integer literal out of range", t.pos);
        }
        if (auto d = parse_decimal(body)) return Value::Decimal(*d);
        throw ParseError("malformed number '" + t.text + "'", t.pos);
      }
      case Tok::kIdent:
        if (keyword(t, "select")) throw ParseError("subqueries are not supported", t.pos);
        throw ParseError("expected a literal, got identifier '" + t.text + "'", t.pos);
      case Tok::kSymbol:
        if (t.text == "(") throw ParseError("nested expressions are not supported", t.pos);
        throw ParseError("expected a literal, got '" + t.text + "'", t.pos);
      default:
        throw ParseError("expected a literal", t.pos);
    }
  }

  Condition condition() {
    const Token& name = next();
    if (name.kind == Tok::kSymbol && name.text == "(") {
      throw ParseError("parenthesized expressions are not supported", name.pos);
    }
    if (keyword(name, "not")) throw ParseError("NOT is not supported", name.pos);
    if (name.kind != Tok::kIdent && name.kind != Tok::kQuotedIdent) {
      throw ParseError("expected attribute name", name.pos);
    }
    const Token& t = peek();
    if (t.kind == Tok::kSymbol && t.text == "(") {
      throw ParseError("functions are not supported", t.pos);
    }
    if (keyword(t, "in") || keyword(t, "not")) {
      Comparator op = Comparator::kIn;
      ++at_;
      if (keyword(t, "not")) {
        op = Comparator::kNotIn;
        expect_kw("in");
      }
      expect_sym("(");
      std::vector<Value> values;
      values.push_back(literal());
      while (peek().kind == Tok::kSymbol && peek().text == ",") {
        ++at_;
        values.push_back(literal());
      }
      expect_sym(")");
      return Condition(name.text, op, std::move(values));
    }
    if (t.kind != Tok::kSymbol) {
      throw ParseError("unknown comparator '" + t.text + "'", t.pos);
    }
    Comparator op;
    if (t.text == "=") {
      op = Comparator::kEq;
    } else if (t.text == "<>" || t.text == "!=") {
      op = Comparator::kNeq;
    } else if (t.text == "<=") {
      op = Comparator::kLe;
    } else if (t.text == "<") {
      op = Comparator::kLt;
    } else if (t.text == ">=") {
      op = Comparator::kGe;
    } else if (t.text == ">") {
      op = Comparator::kGt;
    } else {
      throw ParseError("unknown comparator '" + t.text + "'", t.pos);
    }
    ++at_;
    return Condition(name.text, op, {literal()});
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

inline bool plain_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  static constexpr std::string_view kReserved[] = {"select", "count", "from",   "where",
                                                   "and",    "or",    "not",    "in",
                                                   "group",  "order", "having", "limit"};
  for (auto kw : kReserved) {
    if (lowercase(s) == kw) return false;
  }
  return true;
}

inline std::string quote_sql(std::string_view s, char q) {
  std::string out(1, q);
  for (char c : s) {
    if (c == q) out += q;
    out += c;
  }
  out += q;
  return out;
}

inline std::string render_literal(const Value& v) {
  if (v.kind() == ValueKind::kText) return quote_sql(v.as_text(), '\'');
  return v.canonical();
}

}  // namespace sql_internal

// Parses `SELECT count(*) FROM <table> WHERE <cond> [AND <cond>]...`.
// Conditions: <attr> {=,<>,!=,<=,<,>=,>} <literal> and <attr> [NOT] IN (<literal>, ...).
// Quoted literals are text; unquoted literals are integers unless they carry
// a '.' or exponent, in which case they are decimals.
inline Query parse_query(std::string_view text) { return sql_internal::Parser(text).parse(); }

inline std::string render_condition(const Condition& c) {
  using namespace sql_internal;
  std::string out =
      plain_identifier(c.attribute()) ? c.attribute() : sql_internal::quote_sql(c.attribute(), '"');
  out += ' ';
  out += c.op() == Comparator::kIn ? "IN" : c.op() == Comparator::kNotIn ? "NOT IN" : token(c.op());
  out += ' ';
  if (is_list(c.op())) {
    out += '(';
    for (std::size_t i = 0; i < c.operands().size(); ++i) {
      if (i) out += ", ";
      out += render_literal(c.operands()[i]);
    }
    out += ')';
  } else {
    out += render_literal(c.operand());
  }
  return out;
}

// Inverse of parse_query for every Query.
inline std::string render_sql(const Query& q, std::string_view table = "t") {
  std::string out = "SELECT count(*) FROM ";
  out += sql_internal::plain_identifier(table) ? std::string(table)
                                               : sql_internal::quote_sql(table, '"');
  out += " WHERE ";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += " AND ";
    out += render_condition(q.conditions()[i]);
  }
  return out;
}

}  // namespace sticky

#endif  // STICKY_SQL_HPP_
