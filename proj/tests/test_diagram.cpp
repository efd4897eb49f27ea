#include "doctest.h"

#include "knot/diagram.hpp"
#include "knot/error.hpp"

#include <random>

using namespace knot;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

ErrorKind error_of(const char* text) {
  try {
    parse_pd(text);
  } catch (const KnotError& e) {
    return e.kind();
  }
  FAIL("no error raised for " << text);
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("parse trefoil") {
  const LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.universe().face_count() == 5);
  CHECK(d.writhe() == 3);
  CHECK(d.alternating());
  CHECK(d.connected());
  CHECK(d.to_pd() == kTrefoil);
  CHECK(mirror(d).writhe() == -3);
}

TEST_CASE("parse unknot and errors") {
  const LinkDiagram u = parse_pd("");
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.universe().face_count() == 2);
  CHECK(u.writhe() == 0);
  CHECK(parse_pd("unknot unknot").component_count() == 2);
  CHECK(parse_pd("# comment only\nunknot").component_count() == 1);
  CHECK(error_of("X[1,4,2,5] X[3,6,4,1]") == ErrorKind::DanglingEdge);
  CHECK(error_of("X[1,2,3]") == ErrorKind::SyntaxError);
  CHECK(error_of("Y[1,2,3,4]") == ErrorKind::SyntaxError);
  CHECK(error_of("X[1,2,3,4") == ErrorKind::SyntaxError);
  CHECK(error_of("X[0,1,1,0]") == ErrorKind::SyntaxError);
}

TEST_CASE("non-planar rotation is rejected") {
  // One crossing whose two loops interleave: a single face, so V - E + F = 0.
  CHECK(error_of("X[1,2,1,2]") == ErrorKind::NonPlanarError);
}

TEST_CASE("hopf shadow") {
  const LinkDiagram h = parse_pd(kHopf);
  CHECK(h.component_count() == 2);
  CHECK(component_count(h.universe()) == 2);
  CHECK(h.universe().face_count() == 4);
  const Shading s = checkerboard(h.universe());
  CHECK(s.shaded_count() == 2);
  const CheckerboardGraph g = checkerboard_graph(h.universe(), s);
  CHECK(g.node_count() == 2);
  CHECK(g.edges.size() == 2);
  CHECK(spanning_tree_count(g) == 2);
  CHECK(std::abs(h.writhe()) == 2);
}

TEST_CASE("trefoil shading and checkerboard graph") {
  const LinkDiagram d = parse_pd(kTrefoil);
  const Shading s = checkerboard(d.universe());
  CHECK(s.shaded_count() == 3);
  CHECK_FALSE(s.shaded[static_cast<std::size_t>(d.universe().outer_face())]);
  for (int e = 0; e < d.edge_count(); ++e)
    CHECK(s.shaded[static_cast<std::size_t>(d.left_face(e))] != s.shaded[static_cast<std::size_t>(d.right_face(e))]);
  const CheckerboardGraph g = checkerboard_graph(d.universe(), s);
  CHECK(g.node_count() == 3);
  CHECK(spanning_tree_count(g) == 3);
  CHECK(spanning_tree_count_brute(g) == 3);

  const LinkDiagram u;
  const Shading su = checkerboard(u.universe());
  CHECK(su.shaded_count() == 1);
  const CheckerboardGraph gu = checkerboard_graph(u.universe(), su);
  CHECK(gu.node_count() == 1);
  CHECK(gu.edges.empty());
  CHECK(spanning_tree_count(gu) == 1);
}

TEST_CASE("outer face hint") {
  const LinkDiagram a = parse_pd(std::string(kTrefoil) + " outer=1");
  const LinkDiagram b = parse_pd(std::string(kTrefoil) + " outer=-1");
  CHECK(a.universe().outer_face() == a.left_face(0));
  CHECK(b.universe().outer_face() == b.right_face(0));
  CHECK(checkerboard(a.universe()).shaded_count() + checkerboard(b.universe()).shaded_count() == 5);
}

TEST_CASE("tree counts against brute force") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    CheckerboardGraph g;
    const int n = 1 + trial % 6;
    g.node_face.resize(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> node(0, n - 1);
    const int m = trial % 12;
    for (int i = 0; i < m; ++i) g.edges.emplace_back(node(rng), node(rng));
    CHECK(spanning_tree_count(g) == spanning_tree_count_brute(g));
  }
  CheckerboardGraph parallel;
  parallel.node_face = {0, 1};
  parallel.edges = {{0, 1}, {0, 1}, {1, 0}};
  CHECK(spanning_tree_count(parallel) == 3);
  CheckerboardGraph split;
  split.node_face = {0, 1};
  CHECK(spanning_tree_count(split) == 0);
}

TEST_CASE("figure eight") {
  const LinkDiagram d = parse_pd(kFigureEight);
  CHECK(d.component_count() == 1);
  CHECK(d.universe().face_count() == 6);
  CHECK(d.writhe() == 0);
  CHECK(d.alternating());
}

TEST_CASE("faces as edge incidences") {
  const LinkDiagram d = parse_pd(kTrefoil);
  const auto fs = faces(d);
  int total = 0;
  for (const auto& f : fs) total += static_cast<int>(f.size());
  CHECK(total == 2 * d.edge_count());
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (const auto& inc : fs[f]) CHECK((inc.left ? d.left_face(inc.edge) : d.right_face(inc.edge)) == static_cast<int>(f));
}

TEST_CASE("relabeling and isomorphism") {
  const LinkDiagram d = parse_pd(kFigureEight);
  const LinkDiagram r = renumbered(d);
  CHECK(isomorphic(d, r));
  CHECK(isomorphic(parse_pd(r.to_pd()), r));
  CHECK(parse_pd(r.to_pd()).to_pd() == r.to_pd());
  // Rotating the crossing list is a relabeling.
  CHECK(isomorphic(parse_pd(kTrefoil), parse_pd("X[3,6,4,1] X[5,2,6,3] X[1,4,2,5]")));
  CHECK_FALSE(isomorphic(parse_pd(kTrefoil), mirror(parse_pd(kTrefoil))));
  CHECK(isomorphic(mirror(mirror(parse_pd(kTrefoil))), parse_pd(kTrefoil)));
  CHECK(reversed(reversed(d)).to_pd() == d.to_pd());
  CHECK(reversed(d).writhe() == d.writhe());
}

TEST_CASE("smoothings") {
  const LinkDiagram d = parse_pd(kTrefoil);
  for (int c = 0; c < 3; ++c) {
    const LinkDiagram k0 = smooth_oriented(d, c);
    CHECK(k0.crossing_count() == 2);
    CHECK(k0.component_count() == 2);
    CHECK(k0.writhe() == 2);
    CHECK(smooth(d, c, Smoothing::A).crossing_count() == 2);
    CHECK(smooth(d, c, Smoothing::B).crossing_count() == 2);
  }
  CHECK(smooth(d, 0, Smoothing::A).component_count() + smooth(d, 0, Smoothing::B).component_count() == 3);
}

TEST_CASE("components declaration") {
  const LinkDiagram h = parse_pd(std::string(kHopf) + " components=[1,3]");
  CHECK(h.component_count() == 2);
  bool rejected = false;
  try {
    parse_pd(std::string(kHopf) + " components=[1,2]");
  } catch (const KnotError& e) {
    rejected = e.kind() == ErrorKind::SyntaxError;
  }
  CHECK(rejected);
}
