#pragma once

// Test-only reader for the rendered polynomial text, so expected values in
// tests can be written the way they print.

#include "knot/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knot::testing {

inline LaurentPoly parse_poly(std::string_view text, std::string_view variable) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected digits in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    Integer coeff = 1;
    bool has_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      coeff = Integer(s.substr(start, i - start));
      has_coeff = true;
    }
    int qexp = 0;
    if (s.compare(i, variable.size(), variable) == 0) {
      i += variable.size();
      qexp = kQuarter;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (s[i] == '-') {
          esign = -1;
          ++i;
        }
        const long long num = read_int(i);
        long long den = 1;
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = read_int(i);
        }
        if (kQuarter % den != 0) throw std::invalid_argument("bad exponent denominator");
        qexp = static_cast<int>(esign * num * (kQuarter / den));
      }
    } else if (!has_coeff) {
      throw std::invalid_argument("bad term in '" + s + "'");
    }
    out += LaurentPoly::monomial(sign * coeff, qexp);
  }
  return out;
}

}  // namespace knot::testing
