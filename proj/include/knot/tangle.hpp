#pragma once

#include "knot/diagram.hpp"
#include "knot/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knot {

enum Endpoint { NW = 0, NE = 1, SW = 2, SE = 3 };

/*
  A 2-tangle. Crossings are unoriented tuples of edge ids in slot order with
  the under-strand at slots 0 and 2, as in PD text. Each id occurs twice
  among the crossing slots and the four endpoints; an id that appears at two
  endpoints is an arc without crossings. Going around the box the endpoints
  read NW, NE, SE, SW in the same rotational sense as crossing slots.
*/
struct TangleDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::array<int, 4> ends{};  // indexed by Endpoint
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

/// Throws DanglingEdge, NonPlanarError or SyntaxError.
void validate(const TangleDiagram& t);

/// PD tokens plus NW=e NE=e SW=e SE=e; `unknot` adds a closed loop.
TangleDiagram parse_tangle(std::string_view text);
std::string to_text(const TangleDiagram& t);

/// [0]: arcs NW-NE and SW-SE.
TangleDiagram zero_tangle();
/// [oo]: arcs NW-SW and NE-SE.
TangleDiagram infinity_tangle();
/// One crossing; sign +1 has bracket vector (A, A^-1), sign -1 (A^-1, A).
TangleDiagram twist_tangle(int sign);

/// T + S: NE of T to NW of S, SE of T to SW of S.
TangleDiagram tangle_sum(const TangleDiagram& t, const TangleDiagram& s);
/// T * S: SW of T to NW of S, SE of T to NE of S.
TangleDiagram tangle_product(const TangleDiagram& t, const TangleDiagram& s);
/// Quarter turn: the NW end moves to NE, NE to SE, SE to SW, SW to NW.
TangleDiagram tangle_rotate(const TangleDiagram& t);
/// Every crossing switched.
TangleDiagram tangle_mirror(const TangleDiagram& t);

struct BracketVector {
  LaurentPoly alpha;  // coefficient of <[0]>
  LaurentPoly beta;   // coefficient of <[oo]>
  friend bool operator==(const BracketVector&, const BracketVector&) = default;
};

/// Sum over smoothings; TooLarge above the enumeration limit.
BracketVector tangle_bracket(const TangleDiagram& t);

enum class Closure { Numerator, Denominator };
/// Numerator joins NW-NE and SW-SE; denominator joins NW-SW and NE-SE.
LinkDiagram closure(const TangleDiagram& t, Closure kind);

using Matrix2 = std::array<std::array<LaurentPoly, 2>, 2>;

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 transpose(const Matrix2& a);
Matrix2 identity_matrix2();
LaurentPoly det(const Matrix2& a);
/// Adjugate: adj(a) * a = det(a) * I.
Matrix2 adjugate(const Matrix2& a);

/// [[d, 1], [1, d]] with d the loop value.
Matrix2 closure_matrix();

/*
  H(T, U): T sits above U; the numerator caps NW-NE of T and SW-SE of U
  close freely, while the bottom cap of T and the top cap of U hook through
  a two-crossing clasp. T's cap passes over at the left crossing and under
  at the right one. H([0], [0]) is a Hopf link beside two split unknots.
*/
LinkDiagram hopf_pairing(const TangleDiagram& t, const TangleDiagram& u);

/// M[i][j] = <H(B_i, B_j)> for B = ([0], [oo]).
Matrix2 hopf_matrix();

/// br(T)^t M br(U)
LaurentPoly pairing_value(const BracketVector& t, const Matrix2& m, const BracketVector& u);

/// A tangle with a hole: the hole's ends are listed as HOLE[nw,ne,sw,se].
struct SurgeryPattern {
  std::vector<std::array<int, 4>> crossings;
  std::array<int, 4> ends{};
  std::array<int, 4> hole{};
  int free_loops = 0;
};

/// Tangle format plus exactly one HOLE[...]; InvalidPattern otherwise.
SurgeryPattern parse_pattern(std::string_view text);
SurgeryPattern identity_pattern();
/// T^omega = T + right.
SurgeryPattern sum_pattern(const TangleDiagram& right);
/// T^omega = T * below.
SurgeryPattern product_pattern(const TangleDiagram& below);
/// The mirror recipe: every pattern crossing switched.
SurgeryPattern mirror_pattern(const SurgeryPattern& p);
/// Pattern p applied, then q around the result.
SurgeryPattern compose_patterns(const SurgeryPattern& p, const SurgeryPattern& q);

/// T^omega, or T^omega-bar with `inverse`.
TangleDiagram omega_surgery(const TangleDiagram& t, const SurgeryPattern& p, bool inverse);

/// Columns br([0]^omega) and br([oo]^omega), so br(T^omega) = Omega br(T).
Matrix2 omega_matrix(const SurgeryPattern& p, bool inverse);

struct ConservationReport {
  Matrix2 omega;
  Matrix2 omega_bar;
  Matrix2 m;
  bool identity = false;        // Omega^t M Omega^-1 = M
  bool mirror_inverse = false;  // Omega-bar = Omega^-1
  bool passes() const { return identity && mirror_inverse; }
};

/// SingularOmega when det(Omega) = 0.
ConservationReport conservation_report(const SurgeryPattern& p);
/// The identity Omega^t M Omega^-1 = M together with Omega-bar = Omega^-1;
/// both are needed for <H(T^omega, U^omega-bar)> = <H(T, U)>.
bool conservation_check(const SurgeryPattern& p);

struct PairingWitness {
  TangleDiagram t;
  TangleDiagram u;
  LaurentPoly before;
  LaurentPoly after;
};

/// First pair (T, U) from the candidates with <H(T^omega, U^omega-bar)> != <H(T, U)>.
std::optional<PairingWitness> find_pairing_witness(const SurgeryPattern& p,
                                                   const std::vector<TangleDiagram>& candidates);

}  // namespace knot
