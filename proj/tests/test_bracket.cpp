#include "doctest.h"
#include "poly_text.hpp"

#include "knot/bracket.hpp"
#include "knot/error.hpp"
#include "knot/reidemeister.hpp"

#include <cstdlib>

using namespace knot;
using knot::testing::parse_poly;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";

LaurentPoly A(std::string_view s) { return parse_poly(s, "A"); }

// Independent oracle: expand one crossing at a time through actual smoothed diagrams.
LaurentPoly bracket_by_recursion(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return bracket_delta().pow(static_cast<unsigned>(d.free_loops() - 1));
  return LaurentPoly::power(1) * bracket_by_recursion(smooth(d, 0, Smoothing::A)) +
         LaurentPoly::power(-1) * bracket_by_recursion(smooth(d, 0, Smoothing::B));
}

}  // namespace

TEST_CASE("trefoil values") {
  const LinkDiagram k = parse_pd(kTrefoil);
  CHECK(bracket(k) == A("-A^5 - A^-3 + A^-7"));
  CHECK(f_poly(k) == A("A^-4 + A^-12 - A^-16"));
  CHECK(jones(k) == parse_poly("t + t^3 - t^4", "t"));
  CHECK(f_poly(mirror(k)) == A("A^4 + A^12 - A^16"));
}

TEST_CASE("small values") {
  const LinkDiagram u;
  CHECK(bracket(u) == LaurentPoly(1));
  CHECK(jones(u) == LaurentPoly(1));
  CHECK(bracket(parse_pd(kHopf)) == A("-A^4 - A^-4"));
  const LinkDiagram unlink = parse_pd("unknot unknot");
  CHECK(bracket(unlink) == bracket_delta());
  CHECK(jones(unlink) == parse_poly("-t^1/2 - t^-1/2", "t"));
  CHECK(jones(parse_pd(kFigureEight)) == parse_poly("t^2 - t + 1 - t^-1 + t^-2", "t"));
}

TEST_CASE("bracket matches recursive smoothing oracle") {
  std::mt19937_64 rng(4);
  for (const char* text : {kTrefoil, kFigureEight, kHopf}) {
    LinkDiagram d = parse_pd(text);
    for (int step = 0; step < 6; ++step) {
      CHECK(bracket(d) == bracket_by_recursion(d));
      d = random_reidemeister(d, rng, {Move::R1Positive, Move::R1Negative, Move::R2, Move::R3});
    }
  }
}

TEST_CASE("axiom decompositions") {
  for (const char* text : {kTrefoil, kFigureEight, kHopf}) {
    const LinkDiagram d = parse_pd(text);
    for (int c = 0; c < d.crossing_count(); ++c)
      CHECK(bracket(d) == LaurentPoly::power(1) * bracket(smooth(d, c, Smoothing::A)) +
                              LaurentPoly::power(-1) * bracket(smooth(d, c, Smoothing::B)));
    CHECK(bracket(with_free_loops(d, 1)) == bracket_delta() * bracket(d));
    CHECK(bracket(disjoint_union(d, d)) == bracket_delta() * bracket(d) * bracket(d));
  }
}

TEST_CASE("curl factors") {
  const LinkDiagram u;
  MoveSite s;
  const LinkDiagram pos = apply_reidemeister(u, Move::R1Positive, s);
  CHECK(bracket(pos) == A("-A^3"));
  const auto pf = curl_check(pos, available_sites(pos, Move::R1Remove).front().face);
  CHECK(pf.exponent == 3);
  CHECK(pf.verified);
  const LinkDiagram neg = apply_reidemeister(u, Move::R1Negative, s);
  s.edge = 0;
  const LinkDiagram neg2 = apply_reidemeister(neg, Move::R1Negative, s);
  CHECK(bracket(neg2) == A("A^-6"));
  const auto nf = curl_check(neg2, available_sites(neg2, Move::R1Remove).front().face);
  CHECK(nf.exponent == -3);
  CHECK(nf.verified);
  CHECK_THROWS_AS(curl_check(parse_pd(kTrefoil), 0), KnotError);
}

TEST_CASE("regular isotopy and ambient invariance") {
  std::mt19937_64 rng(8);
  for (const char* text : {kTrefoil, kFigureEight, kHopf}) {
    const LinkDiagram d = parse_pd(text);
    const LaurentPoly b = bracket(d), f = f_poly(d);
    LinkDiagram e = d;
    for (int step = 0; step < 25; ++step) {
      const int before = e.writhe();
      const LaurentPoly be = bracket(e);
      LinkDiagram next = random_reidemeister(e, rng, {Move::R1Positive, Move::R1Negative, Move::R2, Move::R3,
                                                      Move::R1Remove, Move::R2Remove});
      if (next.crossing_count() > 10) next = random_reidemeister(e, rng, {Move::R1Remove, Move::R2Remove});
      const int dw = next.writhe() - before;
      CHECK(bracket(next) == (dw == 0 ? be : -LaurentPoly::power(3 * dw) * be));
      e = next;
      CHECK(f_poly(e) == f);
    }
    (void)b;
  }
}

TEST_CASE("switching formula") {
  const LinkDiagram k = parse_pd(kTrefoil);
  for (int c = 0; c < 3; ++c) {
    const LinkDiagram u = switch_crossing(k, c);
    CHECK(switching_check(k, u, c));
    CHECK(switching_check(u, k, c));
    CHECK(bracket(u) == A("-A^3"));
    CHECK(bracket(smooth(u, c, Smoothing::A)) == A("A^-6"));
    const LaurentPoly a = LaurentPoly::power(1), ai = LaurentPoly::power(-1);
    CHECK(ai * bracket(k) - a * bracket(u) ==
          (LaurentPoly::power(-2) - LaurentPoly::power(2)) * bracket(smooth(u, c, Smoothing::A)));
  }
  CHECK_THROWS_AS(switching_check(k, k, 0), KnotError);
}

TEST_CASE("bracket limit follows the environment") {
  setenv("KNOT_MAX_CROSSINGS", "2", 1);
  CHECK_THROWS_AS(bracket(parse_pd(kTrefoil)), KnotError);
  CHECK(bracket(parse_pd(kHopf)) == A("-A^4 - A^-4"));
  unsetenv("KNOT_MAX_CROSSINGS");
  CHECK(bracket(parse_pd(kTrefoil)) == A("-A^5 - A^-3 + A^-7"));
}
