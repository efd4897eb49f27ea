#include "knot/bracket.hpp"

#include "knot/error.hpp"
#include "knot/reidemeister.hpp"

#include <numeric>

namespace knot {

namespace {

constexpr int kBracketLimit = 24;

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

LaurentPoly bracket_delta() { return -LaurentPoly::power(2) - LaurentPoly::power(-2); }

int smoothing_loops(const LinkDiagram& d, unsigned long long b_mask) {
  const int n = d.crossing_count();
  std::vector<int> parent(static_cast<std::size_t>(d.edge_count()));
  std::iota(parent.begin(), parent.end(), 0);
  int classes = d.edge_count();
  const auto join = [&](int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --classes;
    }
  };
  for (int c = 0; c < n; ++c) {
    if (b_mask >> c & 1ull) {
      join(d.edge_at(c, 0), d.edge_at(c, 1));
      join(d.edge_at(c, 2), d.edge_at(c, 3));
    } else {
      join(d.edge_at(c, 0), d.edge_at(c, 3));
      join(d.edge_at(c, 1), d.edge_at(c, 2));
    }
  }
  return classes + d.free_loops();
}

LaurentPoly bracket(const LinkDiagram& d) {
  const int n = d.crossing_count();
  const int limit = enumeration_limit(kBracketLimit);
  if (n > limit || n > 62)
    throw KnotError(ErrorKind::TooLarge, std::to_string(n) + " crossings exceeds the bracket limit of " +
                                             std::to_string(limit));
  // counts[b][loops]: number of states with b B-smoothings and that many loops.
  const int max_loops = d.edge_count() + d.free_loops();
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(max_loops) + 1, 0));
  const unsigned long long states = 1ull << n;
  for (unsigned long long mask = 0; mask < states; ++mask)
    ++counts[static_cast<std::size_t>(__builtin_popcountll(mask))][static_cast<std::size_t>(smoothing_loops(d, mask))];

  const LaurentPoly delta = bracket_delta();
  std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(max_loops) + 1);
  delta_pow[0] = LaurentPoly(1);
  for (std::size_t i = 1; i < delta_pow.size(); ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPoly total;
  for (int b = 0; b <= n; ++b)
    for (int loops = 1; loops <= max_loops; ++loops) {
      const long long k = counts[static_cast<std::size_t>(b)][static_cast<std::size_t>(loops)];
      if (k == 0) continue;
      total += LaurentPoly::monomial(k, (n - 2 * b) * kQuarter) * delta_pow[static_cast<std::size_t>(loops) - 1];
    }
  return total;
}

LaurentPoly f_poly(const LinkDiagram& d) {
  const int w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w * kQuarter);
  return factor * bracket(d);
}

LaurentPoly jones(const LinkDiagram& d) { return poly_substitute(f_poly(d), {1, -1}); }

CurlFactor curl_check(const LinkDiagram& d, int face) {
  if (face < 0 || d.crossing_count() == 0 || face >= d.universe().face_count() ||
      d.universe().faces()[static_cast<std::size_t>(face)].size() != 1)
    throw KnotError(ErrorKind::NotACurl, "face " + std::to_string(face) + " is not bounded by a single curl");
  const int c = d.universe().faces()[static_cast<std::size_t>(face)].front().crossing;
  MoveSite site;
  site.face = face;
  const LinkDiagram without = apply_reidemeister(d, Move::R1Remove, site);
  // The A-smoothing splits off the curl's loop exactly when the factor is -A^3.
  const bool a_splits = smooth(d, c, Smoothing::A).component_count() > smooth(d, c, Smoothing::B).component_count();
  CurlFactor out;
  out.exponent = a_splits ? 3 : -3;
  out.verified = bracket(d) == -LaurentPoly::power(out.exponent) * bracket(without);
  return out;
}

bool switching_check(const LinkDiagram& chi, const LinkDiagram& chi_bar, int crossing) {
  if (crossing < 0 || crossing >= chi.crossing_count())
    throw KnotError(ErrorKind::SiteMismatch, "no crossing " + std::to_string(crossing));
  if (!isomorphic(chi_bar, switch_crossing(chi, crossing)))
    throw KnotError(ErrorKind::SiteMismatch, "diagrams differ away from crossing " + std::to_string(crossing));
  const LaurentPoly a = LaurentPoly::power(1), a_inv = LaurentPoly::power(-1);
  const LaurentPoly lhs = a * bracket(chi) - a_inv * bracket(chi_bar);
  const LaurentPoly rhs = (LaurentPoly::power(2) - LaurentPoly::power(-2)) * bracket(smooth(chi, crossing, Smoothing::A));
  return lhs == rhs;
}

}  // namespace knot
