#ifndef SUPERINT_SRC_FORMAT_DETAIL_HPP
#define SUPERINT_SRC_FORMAT_DETAIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "superint/expression.hpp"

namespace superint::detail {

/// Joins coefficient*factor summands with " + " / " - ", pulling the sign of
/// single-term coefficients out and parenthesizing multi-term ones.
inline std::string joinSummands(const std::vector<std::pair<Expression, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, factor] : parts) {
    bool negative = false;
    std::string body;
    if (c.size() == 1) {
      body = c.str();
      if (body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
      if (!factor.empty()) body = body == "1" ? factor : body + "*" + factor;
    } else if (factor.empty()) {
      body = first ? c.str() : "(" + c.str() + ")";
    } else {
      body = "(" + c.str() + ")*" + factor;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

inline std::string powerFactors(const char* first, unsigned e1, const char* second, unsigned e2) {
  std::string s;
  auto append = [&s](const char* name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append(first, e1);
  append(second, e2);
  return s;
}

}  // namespace superint::detail

#endif  // SUPERINT_SRC_FORMAT_DETAIL_HPP
