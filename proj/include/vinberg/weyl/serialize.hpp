#pragma once

#include <string>
#include <vector>

#include "vinberg/exactalg/serialize.hpp"
#include "vinberg/weyl/weyl_op.hpp"

namespace vinberg {

/// Derivative names are the coordinate names prefixed with `D`.
inline std::vector<std::string> weyl_names(const std::vector<std::string>& coords) {
  std::vector<std::string> all = coords;
  for (const auto& n : coords) all.push_back("D" + n);
  return all;
}

inline WeylOp parse_weyl(std::string_view text, const std::vector<std::string>& coords) {
  const std::size_t n = coords.size();
  WeylOp op(n);
  for (auto& t : detail::parse_terms(text, weyl_names(coords))) {
    std::vector<int> x(t.exps.begin(), t.exps.begin() + n);
    std::vector<int> d(t.exps.begin() + n, t.exps.end());
    for (int e : d)
      if (e < 0) throw ParseError("negative derivative exponent");
    op.add_term(Monomial(x), Monomial(d), t.coef);
  }
  return op;
}

/// Text form `coef * a^i b^j c^k d^l * Da^p Db^q Dc^r Dd^s`.
inline std::string to_text(const WeylOp& op, const std::vector<std::string>& coords) {
  require_same_arity(op.arity(), coords.size(), "to_text");
  if (op.is_zero()) return "0";
  auto names = weyl_names(coords);
  std::string s;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second);
    s += " * " + detail::format_factors(it->first.x, names);
    s += " * " + detail::format_factors(it->first.d, names, coords.size());
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const WeylOp& op) {
  return os << to_text(op, default_names(op.arity()));
}

inline json to_json(const WeylOp& op) {
  json arr = json::array();
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    arr.push_back({{"coef", to_string(it->second)}, {"x", it->first.x.to_vector()}, {"d", it->first.d.to_vector()}});
  }
  return arr;
}

inline WeylOp weyl_from_json(const json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("operator JSON must be an array of terms");
  WeylOp op(arity);
  for (const auto& t : j) {
    auto x = t.at("x").get<std::vector<int>>();
    auto d = t.at("d").get<std::vector<int>>();
    require_same_arity(arity, x.size(), "weyl_from_json");
    require_same_arity(arity, d.size(), "weyl_from_json");
    op.add_term(Monomial(x), Monomial(d), rational_from_json(t.at("coef")));
  }
  return op;
}

}  // namespace vinberg
