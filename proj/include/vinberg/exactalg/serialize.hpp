#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vinberg/exactalg/linalg.hpp"
#include "vinberg/exactalg/poly.hpp"

namespace vinberg {

using json = nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct ParsedTerm {
  Rational coef;
  std::vector<int> exps;
};

/// Parses sums of terms `coef * x^i y^j ...`. Factors may be separated by
/// spaces or `*`; omitted exponents are 1, an omitted coefficient is 1.
inline std::vector<ParsedTerm> parse_terms(std::string_view text, const std::vector<std::string>& names) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("parse error at offset " + std::to_string(pos) + ": " + what);
  };
  auto read_uint = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };
  std::vector<ParsedTerm> out;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) {
      if (first) throw fail("empty expression");
      break;
    }
    int sign = 1;
    if (!first) {
      if (text[pos] != '+' && text[pos] != '-') throw fail("expected + or -");
    }
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
    }
    first = false;
    ParsedTerm term{Rational(sign), std::vector<int>(names.size(), 0)};
    bool seen = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_uint();
      std::string den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_uint();
      }
      term.coef *= parse_rational(num + "/" + den);
      seen = true;
    }
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      if (start == pos) break;
      std::string name(text.substr(start, pos - start));
      std::size_t idx = 0;
      while (idx < names.size() && names[idx] != name) ++idx;
      if (idx == names.size()) throw fail("unknown variable '" + name + "'");
      int e = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
          neg = true;
          ++pos;
        }
        e = std::stoi(read_uint());
        if (neg) e = -e;
      }
      term.exps[idx] += e;
      seen = true;
    }
    if (!seen) throw fail("expected a term");
    out.push_back(std::move(term));
  }
  return out;
}

inline std::string format_factors(const Monomial& m, const std::vector<std::string>& names, std::size_t offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (i) s += ' ';
    s += names[offset + i] + "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

inline Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  Poly p(names.size());
  for (auto& t : detail::parse_terms(text, names)) p.add_term(Monomial(t.exps), t.coef);
  return p;
}

/// Text form: `coef * a^i b^j c^k d^l` terms in decreasing order, joined by ` + `.
inline std::string to_text(const Poly& p, const std::vector<std::string>& names) {
  require_same_arity(p.arity(), names.size(), "to_text");
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second);
    if (p.arity() > 0) s += " * " + detail::format_factors(it->first, names);
  }
  return s;
}

/// a,b,c,d for arity four, x1..xn otherwise.
inline std::vector<std::string> default_names(std::size_t arity) {
  if (arity == 4) return {"a", "b", "c", "d"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_text(p, default_names(p.arity())); }

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a p/q string or an integer");
}

/// JSON array of {"coef": "p/q", "exp": [...]}, highest term first.
inline json to_json(const Poly& p) {
  json arr = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    arr.push_back({{"coef", to_string(it->second)}, {"exp", it->first.to_vector()}});
  }
  return arr;
}

inline Poly poly_from_json(const json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  Poly p(arity);
  for (const auto& t : j) {
    auto exps = t.at("exp").get<std::vector<int>>();
    require_same_arity(arity, exps.size(), "poly_from_json");
    p.add_term(Monomial(exps), rational_from_json(t.at("coef")));
  }
  return p;
}

inline json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ParseError("ragged matrix JSON");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

inline json to_json(const QVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace vinberg
