#pragma once

#include <string>

#include "fermat/rational.hpp"

namespace fermat::detail {

// Appends `c*mono` to a sum being rendered; unit coefficients are dropped when a
// monomial is present and signs become ` + ` / ` - ` separators after the first term.
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  bool negative = c.sign() < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  Rational magnitude = negative ? -c : c;
  if (mono.empty()) {
    out += magnitude.str();
  } else if (magnitude.is_one()) {
    out += mono;
  } else {
    out += magnitude.str();
    out += '*';
    out += mono;
  }
}

inline std::string power_text(const std::string& base, long exponent) {
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

}  // namespace fermat::detail
