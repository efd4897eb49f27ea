#pragma once

#include "knot/poly.hpp"

#include <string>
#include <string_view>

namespace knot {

/// Text form used by the CLI: terms by decreasing exponent, e.g.
/// "-A^5 - A^-3 + A^-7", "-t^1/2 - t^-1/2", "0".
std::string render_poly(const LaurentPoly& p, std::string_view variable);

enum class TermOrder { Descending, Ascending };
/// As above with a chosen term order; `knot jones` prints ascending.
std::string render_poly(const LaurentPoly& p, std::string_view variable, TermOrder order);

/// Exponent text for a quarter-unit exponent: "3", "-1/2", "5/4".
std::string render_exponent(int quarter_exponent);

/// {"terms": [[quarter_exponent, coefficient], ...]} sorted by descending exponent.
/// Coefficients are emitted as JSON numbers (arbitrary length).
std::string render_poly_json(const LaurentPoly& p);

}  // namespace knot
