#pragma once

#include "knot/diagram.hpp"
#include "knot/poly.hpp"

#include <vector>

namespace knot {

/// delta = -A^2 - A^-2
LaurentPoly bracket_delta();

/// Number of closed curves after smoothing every crossing; bit c of
/// `b_mask` set means crossing c takes the B-smoothing.
int smoothing_loops(const LinkDiagram& d, unsigned long long b_mask);

/// Kauffman bracket: sum over all 2^N smoothings of A^(#A - #B) delta^(loops - 1).
/// Throws TooLarge above the enumeration limit (24 crossings, or KNOT_MAX_CROSSINGS).
LaurentPoly bracket(const LinkDiagram& d);

/// f = (-A^3)^(-w) <K>
LaurentPoly f_poly(const LinkDiagram& d);

/// V(t) = f(t^(-1/4)); quarter exponents appear for even component counts.
LaurentPoly jones(const LinkDiagram& d);

struct CurlFactor {
  int exponent = 0;  // +3 or -3: <K> = -A^exponent <K without the curl>
  bool verified = false;
};

/// `face` must be the one-cornered face of a curl, otherwise NotACurl.
CurlFactor curl_check(const LinkDiagram& d, int face);

/// A<chi> - A^-1<chi_bar> = (A^2 - A^-2)<chi A-smoothed at the site>.
/// chi_bar must be chi with the crossing switched, otherwise SiteMismatch.
bool switching_check(const LinkDiagram& chi, const LinkDiagram& chi_bar, int crossing);

}  // namespace knot
