#include "knot/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace knot {

std::string render_exponent(int quarter_exponent) {
  if (quarter_exponent % kQuarter == 0) return std::to_string(quarter_exponent / kQuarter);
  const int g = std::gcd(quarter_exponent, kQuarter);
  return std::to_string(quarter_exponent / g) + "/" + std::to_string(kQuarter / g);
}

std::string render_poly(const LaurentPoly& p, std::string_view variable) {
  return render_poly(p, variable, TermOrder::Descending);
}

std::string render_poly(const LaurentPoly& p, std::string_view variable, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<int, Integer>> terms(p.terms().rbegin(), p.terms().rend());
  if (order == TermOrder::Ascending) std::reverse(terms.begin(), terms.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (e == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude;
    os << variable;
    if (e != kQuarter) os << '^' << render_exponent(e);
  }
  return os.str();
}

std::string render_poly_json(const LaurentPoly& p) {
  std::ostringstream os;
  os << "{\"terms\": [";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << '[' << it->first << ", " << it->second << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace knot
