#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vinberg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p/q`, `p`, or `-p/q` into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && (text[first] == ' ' || text[first] == '\t')) ++first;
  while (last > first && (text[last - 1] == ' ' || text[last - 1] == '\t')) --last;
  std::string s(text.substr(first, last - first));
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char ch : part) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw std::invalid_argument("malformed rational: " + s);
    return Rational(Integer(s));
  }
  std::string_view num(s.data(), slash);
  std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r{Integer(std::string(num)), d};
  r.canonicalize();
  return r;
}

/// Canonical `p/q` form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// num/den in lowest terms. (mpq_class's two-argument constructor does not
/// canonicalize, and non-canonical values compare incorrectly.)
inline Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace vinberg
