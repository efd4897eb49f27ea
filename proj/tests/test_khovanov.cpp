#include "doctest.h"
#include "corpus.hpp"
#include "poly_text.hpp"

#include "knot/bracket.hpp"
#include "knot/error.hpp"
#include "knot/khovanov.hpp"

#include <cstdlib>

using namespace knot;
using knot::testing::corpus;
using knot::testing::parse_poly;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

std::size_t total_dimension(const CubeComplex& c) {
  std::size_t n = 0;
  for (const auto& g : c.chains) n += g.size();
  return n;
}

}  // namespace

TEST_CASE("Frobenius algebra") {
  const FrobeniusAlgebra a = khovanov_algebra();
  CHECK(frobenius_check(a));
  const FrobeniusMaps f = frobenius_maps(a);
  CHECK(f.f == f.g);
  CHECK(f.g == f.h);
  CHECK(f.f.size() == 4);
  // Delta(1) = 1 (x) 1 breaks the compatibility.
  FrobeniusAlgebra broken = a;
  broken.delta = {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
  CHECK_FALSE(frobenius_check(broken));
  FrobeniusAlgebra squared = a;
  squared.m[1][3] = 1;
  CHECK_FALSE(frobenius_check(squared));
}

TEST_CASE("small complexes") {
  const CubeComplex unknot = build_complex(LinkDiagram(), Field::Rational);
  CHECK(unknot.chains.size() == 1);
  CHECK(total_dimension(unknot) == 2);
  CHECK(unknot.differential.empty());
  CHECK(verify_d2(unknot));
  CHECK(homology(unknot) == HomologyTable{{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(graded_euler(homology(unknot)) == parse_poly("q + q^-1", "q"));

  const LinkDiagram curl = apply_reidemeister(LinkDiagram(), Move::R1Positive, available_sites(LinkDiagram(), Move::R1Positive).front());
  const CubeComplex c1 = build_complex(curl, Field::Rational);
  CHECK(c1.chains.size() == 2);
  REQUIRE(c1.differential.size() == 1);
  CHECK(total_dimension(c1) == 4 + 2);
  CHECK(homology(c1) == homology(unknot));

  const LinkDiagram k = parse_pd(kTrefoil);
  const CubeComplex c = build_complex(k, Field::Rational);
  std::size_t expected = 0;
  for (unsigned long long s = 0; s < 8; ++s) expected += std::size_t{1} << smoothing_loops(k, s);
  CHECK(total_dimension(c) == expected);
}

TEST_CASE("trefoil homology") {
  const LinkDiagram k = parse_pd(kTrefoil);
  const CubeComplex q = build_complex(k, Field::Rational);
  const CubeComplex z2 = build_complex(k, Field::Mod2);
  CHECK(verify_d2(q));
  CHECK(verify_d2(z2));
  CHECK_FALSE(verify_d2(build_complex(k, Field::Rational, false)));
  CHECK(homology(q) == HomologyTable{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}});
  CHECK(homology(z2) ==
        HomologyTable{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}});
  CHECK(graded_euler(homology(q)) == calibrated_jones(jones(k)));
  CHECK(calibrated_jones(jones(k)) == parse_poly("q + q^3 + q^5 - q^9", "q"));
}

TEST_CASE("corpus: d^2, Euler characteristic, field comparison") {
  for (const auto& s : corpus()) {
    INFO(s.name);
    const CubeComplex q = build_complex(s.diagram, Field::Rational);
    const CubeComplex z2 = build_complex(s.diagram, Field::Mod2);
    CHECK(verify_d2(q));
    CHECK(verify_d2(z2));
    const HomologyTable hq = homology(q), hz = homology(z2);
    const LaurentPoly chi = graded_euler(chain_ranks(q));
    CHECK(graded_euler(hq) == chi);
    CHECK(graded_euler(hz) == chi);
    CHECK(chi == calibrated_jones(jones(s.diagram)));
    for (const auto& [key, rank] : hq) {
      const auto it = hz.find(key);
      CHECK((it != hz.end() && it->second >= rank));
    }
  }
}

TEST_CASE("homology survives Reidemeister moves") {
  std::mt19937_64 rng(31);
  for (std::size_t i = 0; i < 6; ++i) {
    const LinkDiagram d = corpus()[i].diagram;
    const HomologyTable expected = homology(build_complex(d, Field::Rational));
    LinkDiagram moved = d;
    for (int step = 0; step < 3; ++step)
      moved = random_reidemeister(moved, rng, {Move::R1Positive, Move::R1Negative, Move::R2, Move::R3});
    if (moved.crossing_count() > 9) continue;
    CHECK(homology(build_complex(moved, Field::Rational)) == expected);
  }
}

TEST_CASE("rank and size limits") {
  CHECK(matrix_rank({{2, 4}, {1, 2}}, Field::Rational) == 1);
  CHECK(matrix_rank({{2, 4}, {1, 3}}, Field::Rational) == 2);
  CHECK(matrix_rank({{2, 4}, {1, 3}}, Field::Mod2) == 1);
  CHECK(matrix_rank({}, Field::Rational) == 0);
  const LinkDiagram k = parse_pd(kTrefoil);
  setenv("KNOT_MAX_CROSSINGS", "2", 1);
  CHECK_THROWS_AS(build_complex(k, Field::Rational), KnotError);
  unsetenv("KNOT_MAX_CROSSINGS");
  CHECK_NOTHROW(build_complex(k, Field::Rational));
}
