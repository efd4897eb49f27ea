#pragma once

#include "knot/diagram.hpp"
#include "knot/linalg.hpp"

#include <vector>

namespace knot {

/// Arcs are maximal runs of edges between under-crossings. Free loops come
/// last, one arc each.
struct ArcDecomposition {
  std::vector<int> arc_of_edge;
  int count = 0;
};

ArcDecomposition arcs(const LinkDiagram& d);

struct FoxColoring {
  Integer modulus = 3;
  std::vector<Integer> labels;  // per arc
};

struct RegionColoring {
  Integer modulus = 3;
  std::vector<Integer> labels;  // per face
};

/// Solution space of a coloring system mod N. Counts include the constant
/// colorings.
struct ColoringSpace {
  Integer modulus;
  Integer count;
  Integer nonconstant;
  std::vector<std::vector<Integer>> basis;
};

/// Row per crossing: a + c - 2b over the arc columns.
Matrix<Integer> fox_matrix(const LinkDiagram& d, const ArcDecomposition& a);
/// Row per crossing over the face columns. With quadrant k between slots k
/// and k+1, the faces flanking the over-strand satisfy q0 + q1 = q2 + q3.
Matrix<Integer> region_matrix(const LinkDiagram& d);

ColoringSpace fox_colorings(const LinkDiagram& d, const Integer& modulus);
ColoringSpace region_colorings(const LinkDiagram& d, const Integer& modulus);

bool is_fox_coloring(const LinkDiagram& d, const FoxColoring& c);
bool is_region_coloring(const LinkDiagram& d, const RegionColoring& c);

/// Each arc gets the sum of the two faces beside it. Free loops beside
/// crossings get 0; in a crossing-free diagram loop k lies between faces k
/// and k+1.
FoxColoring region_to_fox(const LinkDiagram& d, const RegionColoring& rc);

}  // namespace knot
