#pragma once

#include "knot/alexander.hpp"
#include "knot/diagram.hpp"

#include <array>
#include <vector>

namespace knot {

/// FKT state: one marked quadrant per crossing, the marked faces running
/// once over every face except the two starred ones.
struct StateMarking {
  FacePair starred;
  std::vector<int> quadrant;  // per crossing
  friend bool operator==(const StateMarking&, const StateMarking&) = default;
  friend auto operator<=>(const StateMarking& a, const StateMarking& b) { return a.quadrant <=> b.quadrant; }
};

/// Fixed orderings and the global sign tying black holes to permutation signs.
struct StateSumContext {
  std::vector<int> face_order;  // unstarred faces, increasing
  int epsilon = 1;
};

enum class Clock { Clockwise, Counterclockwise };

bool is_valid_state(const LinkDiagram& d, const StateMarking& s);

/// Via bipartite matching of unstarred faces to crossings. NoState if none.
StateMarking initial_state(const LinkDiagram& d, FacePair starred);

/// Exchange the markers at crossings i and j between two adjacent faces
/// they both touch, each marker turning one quadrant in the given sense.
/// MoveNotAvailable when the markers are not placed for it.
StateMarking clock_move(const LinkDiagram& d, const StateMarking& s, int i, int j, Clock direction);

/// All states reachable by one clock move.
std::vector<StateMarking> clock_neighbors(const LinkDiagram& d, const StateMarking& s);

/// Breadth-first closure under clock moves from initial_state, sorted.
/// Cross-checked against brute force up to 7 crossings.
std::vector<StateMarking> enumerate_states(const LinkDiagram& d, FacePair starred);

/// Every bijective marker assignment, by backtracking; sorted.
std::vector<StateMarking> enumerate_states_brute(const LinkDiagram& d, FacePair starred);

/// Quadrant where both strands point into the crossing.
int black_hole_quadrant(const LinkDiagram& d, int crossing);
int black_hole_count(const LinkDiagram& d, const StateMarking& s);

StateSumContext state_context(const LinkDiagram& d, FacePair starred);
int state_permutation_sign(const LinkDiagram& d, const StateMarking& s, const StateSumContext& ctx);

/// sum over states of (-1)^b times the product of Alexander labels.
LaurentPoly alexander_state_sum(const LinkDiagram& d, FacePair starred);

/// weight[positive ? 1 : 0][quadrant]
struct ConwayWeightTable {
  std::array<std::array<LaurentPoly, 4>, 2> weight;
};

/// Alexander labels, signs dropped, x -> x^2 then times x^-1, weights
/// between oppositely oriented strands set to 1, then x <-> x^-1.
ConwayWeightTable derive_conway_weights();

/// Exact Conway potential in x; zero for split diagrams.
LaurentPoly conway_state_sum(const LinkDiagram& d, FacePair starred);
LaurentPoly conway_poly(const LinkDiagram& d);

/// Rewrites a polynomial in x as one in z = x - x^-1 (InexactDivision if impossible).
LaurentPoly conway_in_z(const LinkDiagram& d);
LaurentPoly to_z_form(const LaurentPoly& omega);

/// K+ (crossing positive), K- (switched), K0 (oriented smoothing) at one site.
struct SkeinTriple {
  LinkDiagram plus, minus, zero;
  int crossing = 0;
};

SkeinTriple skein_triple(const LinkDiagram& d, int crossing);

/// Omega(K+) - Omega(K-) = (x - x^-1) Omega(K0). SiteMismatch unless the
/// three diagrams are the switch/smoothing of one another at `crossing`.
bool skein_check(const LinkDiagram& plus, const LinkDiagram& minus, const LinkDiagram& zero, int crossing);

/// Omega(x) agrees up to +-x^n with Delta(x^2), the half-power-free form of
/// Omega(sqrt x) = Delta(x).
bool conway_alexander_bridge(const LinkDiagram& d);

}  // namespace knot
