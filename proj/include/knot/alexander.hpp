#pragma once

#include "knot/diagram.hpp"
#include "knot/linalg.hpp"

#include <utility>

namespace knot {

using FacePair = std::pair<int, int>;

/*
  Quadrant labels at every crossing. The two quadrants left of the
  under-strand carry the dots; the one the under-strand points into is A.
  Going A, B, C, D around the crossing gives +x, -x, +1, -1; in quadrant
  numbering that is 1 -> +x, 0 -> -x, 3 -> +1, 2 -> -1.
*/
LaurentPoly alexander_label(int quadrant);

struct AlexanderMatrix {
  Matrix<LaurentPoly> full;     // crossings x faces
  FacePair starred;
  std::vector<int> columns;     // faces kept, increasing
  Matrix<LaurentPoly> reduced;  // crossings x kept faces
};

/// Lexicographically first pair of adjacent faces.
FacePair default_star(const LinkDiagram& d);

/// Throws DisconnectedDiagram for split diagrams, NonAdjacentStars when
/// the starred faces do not share an edge.
AlexanderMatrix alexander_matrix(const LinkDiagram& d, FacePair starred);

/// det of the reduced matrix, before normalization.
LaurentPoly alexander_determinant(const LinkDiagram& d, FacePair starred);

/// Canonical representative: lowest exponent 0, positive leading coefficient.
LaurentPoly alexander_poly(const LinkDiagram& d);

/// |Delta(-1)|
Integer knot_determinant(const LinkDiagram& d);

}  // namespace knot
