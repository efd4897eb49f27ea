#include "knot/alexander.hpp"

#include "knot/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace knot {

LaurentPoly alexander_label(int quadrant) {
  switch (((quadrant % 4) + 4) % 4) {
    case 1: return LaurentPoly::power(1);
    case 0: return -LaurentPoly::power(1);
    case 3: return LaurentPoly(1);
    default: return LaurentPoly(-1);
  }
}

FacePair default_star(const LinkDiagram& d) {
  if (!d.connected()) throw KnotError(ErrorKind::DisconnectedDiagram, "the diagram is split");
  const auto& pairs = d.universe().adjacent_face_pairs();
  if (pairs.empty()) throw KnotError(ErrorKind::NonAdjacentStars, "no adjacent faces");
  return pairs.front();
}

AlexanderMatrix alexander_matrix(const LinkDiagram& d, FacePair starred) {
  if (!d.connected()) throw KnotError(ErrorKind::DisconnectedDiagram, "the diagram is split");
  const Universe& u = d.universe();
  const int faces = u.face_count();
  if (starred.first < 0 || starred.second < 0 || starred.first >= faces || starred.second >= faces ||
      !u.faces_adjacent(starred.first, starred.second))
    throw KnotError(ErrorKind::NonAdjacentStars, "faces " + std::to_string(starred.first) + " and " +
                                                     std::to_string(starred.second) + " do not share an edge");
  AlexanderMatrix m;
  m.starred = starred;
  m.full.assign(static_cast<std::size_t>(d.crossing_count()), std::vector<LaurentPoly>(static_cast<std::size_t>(faces)));
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int q = 0; q < 4; ++q) m.full[static_cast<std::size_t>(c)][static_cast<std::size_t>(u.face_of(c, q))] += alexander_label(q);
  for (int f = 0; f < faces; ++f)
    if (f != starred.first && f != starred.second) m.columns.push_back(f);
  for (const auto& row : m.full) {
    std::vector<LaurentPoly> kept;
    for (int f : m.columns) kept.push_back(row[static_cast<std::size_t>(f)]);
    m.reduced.push_back(std::move(kept));
  }
  return m;
}

LaurentPoly alexander_determinant(const LinkDiagram& d, FacePair starred) {
  const AlexanderMatrix m = alexander_matrix(d, starred);
  LaurentPoly det = determinant_bareiss(m.reduced);
  if (m.reduced.size() <= 8 && determinant_cofactor(m.reduced) != det)
    throw std::logic_error("Bareiss and cofactor determinants disagree");
  return det;
}

LaurentPoly alexander_poly(const LinkDiagram& d) { return dot_canonical(alexander_determinant(d, default_star(d))); }

Integer knot_determinant(const LinkDiagram& d) {
  const Rational v = poly_evaluate(alexander_poly(d), -1);
  const Integer n = boost::multiprecision::numerator(v);
  return n < 0 ? Integer(-n) : n;
}

}  // namespace knot
