#include "doctest.h"
#include "corpus.hpp"

#include "knot/alexander.hpp"
#include "knot/coloring.hpp"

#include <functional>

using namespace knot;
using knot::testing::corpus;

namespace {

// Every arc assignment, checked crossing by crossing.
Integer brute_fox_count(const LinkDiagram& d, int n) {
  const ArcDecomposition a = arcs(d);
  std::vector<int> label(static_cast<std::size_t>(a.count), 0);
  Integer count = 0;
  std::function<void(int)> go = [&](int i) {
    if (i == a.count) {
      for (int c = 0; c < d.crossing_count(); ++c) {
        const auto at = [&](int slot) { return label[static_cast<std::size_t>(a.arc_of_edge[static_cast<std::size_t>(d.edge_at(c, slot))])]; };
        if ((at(0) + at(2) - 2 * at(1)) % n != 0) return;
      }
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      label[static_cast<std::size_t>(i)] = v;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

bool is_prime(int p) {
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return p >= 2;
}

}  // namespace

TEST_CASE("Fox colorings of small diagrams") {
  const LinkDiagram trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(arcs(trefoil).count == 3);
  const ColoringSpace three = fox_colorings(trefoil, 3);
  CHECK(three.count == 9);
  CHECK(three.nonconstant == 6);
  CHECK(three.count == brute_fox_count(trefoil, 3));
  CHECK(fox_colorings(trefoil, 2).count == 2);
  CHECK(fox_colorings(trefoil, 2).count == brute_fox_count(trefoil, 2));
  for (int n : {2, 3, 7}) CHECK(fox_colorings(LinkDiagram(), n).count == n);
  CHECK(fox_colorings(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"), 5).count == 25);
}

TEST_CASE("Fox counts against brute force") {
  for (const auto& s : corpus()) {
    if (arcs(s.diagram).count > 7) continue;
    for (int n : {2, 3, 4, 5, 6}) {
      INFO(s.name << " mod " << n);
      const ColoringSpace space = fox_colorings(s.diagram, n);
      CHECK(space.count == brute_fox_count(s.diagram, n));
      for (const auto& g : space.basis) CHECK(is_fox_coloring(s.diagram, {n, g}));
    }
  }
}

TEST_CASE("nonconstant prime colorings divide the determinant") {
  for (const auto& s : corpus()) {
    if (s.diagram.component_count() != 1) continue;
    const Integer det = knot_determinant(s.diagram);
    for (int p = 2; p < 20; ++p) {
      if (!is_prime(p)) continue;
      INFO(s.name << " p=" << p);
      CHECK((fox_colorings(s.diagram, p).nonconstant > 0) == (det % p == 0));
    }
  }
}

TEST_CASE("region colorings") {
  const LinkDiagram trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(region_colorings(trefoil, 3).nonconstant > 0);
  CHECK(region_colorings(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"), 5).nonconstant > 0);
  for (const auto& s : corpus()) {
    const int faces = s.diagram.universe().face_count();
    CHECK(is_region_coloring(s.diagram, {5, std::vector<Integer>(static_cast<std::size_t>(faces), Integer(0))}));
    CHECK(is_region_coloring(s.diagram, {5, std::vector<Integer>(static_cast<std::size_t>(faces), Integer(2))}));
  }
}

TEST_CASE("region rule is the unsigned Alexander row at x = -1") {
  for (const auto& s : corpus()) {
    const LinkDiagram& d = s.diagram;
    const Universe& u = d.universe();
    Matrix<Integer> expected(static_cast<std::size_t>(d.crossing_count()),
                             std::vector<Integer>(static_cast<std::size_t>(u.face_count()), Integer(0)));
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int q = 0; q < 4; ++q) {
        // |label| is x or 1; at x = -1 that is -1 or 1, and the row is negated.
        const bool carries_x = alexander_label(q).max_exponent() != 0;
        expected[static_cast<std::size_t>(c)][static_cast<std::size_t>(u.face_of(c, q))] -= carries_x ? -1 : 1;
      }
    CHECK(region_matrix(d) == expected);
  }
}

TEST_CASE("region colorings translate to Fox colorings") {
  std::mt19937_64 rng(5);
  for (const auto& s : corpus()) {
    const Integer det = knot_determinant(s.diagram);
    for (Integer n : {Integer(3), Integer(5), det > 1 ? det : Integer(2)}) {
      const ColoringSpace space = region_colorings(s.diagram, n);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Integer> labels(static_cast<std::size_t>(s.diagram.universe().face_count()), Integer(0));
        for (const auto& g : space.basis) {
          const Integer k = static_cast<long long>(rng() % 7);
          for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (labels[i] + k * g[i]) % n;
        }
        const RegionColoring rc{n, labels};
        REQUIRE(is_region_coloring(s.diagram, rc));
        CHECK(is_fox_coloring(s.diagram, region_to_fox(s.diagram, rc)));
      }
    }
  }
  const LinkDiagram trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const RegionColoring zero{3, std::vector<Integer>(5, Integer(0))};
  for (const auto& v : region_to_fox(trefoil, zero).labels) CHECK(v == 0);
  bool nonconstant = false;
  for (const auto& g : region_colorings(trefoil, 3).basis) {
    const FoxColoring f = region_to_fox(trefoil, {3, g});
    for (const auto& v : f.labels) nonconstant |= v != f.labels.front();
  }
  CHECK(nonconstant);
}

TEST_CASE("coloring counts survive Reidemeister moves") {
  std::mt19937_64 rng(11);
  for (std::size_t i = 0; i < 8; ++i) {
    LinkDiagram d = corpus()[i].diagram;
    const Integer three = fox_colorings(d, 3).count, five = fox_colorings(d, 5).count;
    for (int step = 0; step < 6; ++step) {
      d = random_reidemeister(d, rng, {Move::R1Positive, Move::R1Negative, Move::R2, Move::R3, Move::R1Remove, Move::R2Remove});
      CHECK(fox_colorings(d, 3).count == three);
      CHECK(fox_colorings(d, 5).count == five);
    }
  }
}

TEST_CASE("corpus shape") {
  CHECK(corpus().size() >= 30);
  for (const auto& s : corpus()) {
    CHECK(s.diagram.connected());
    CHECK(s.diagram.crossing_count() <= 8);
  }
}
