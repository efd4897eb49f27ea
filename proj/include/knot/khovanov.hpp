#pragma once

#include "knot/diagram.hpp"
#include "knot/linalg.hpp"
#include "knot/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace knot {

/// Basis {1, X} as indices 0, 1; a (x) b has index 2a + b.
struct FrobeniusAlgebra {
  Matrix<Integer> m;      // 2 x 4
  Matrix<Integer> delta;  // 4 x 2
};

/// 1 is the unit, X^2 = 0, Delta(1) = 1(x)X + X(x)1, Delta(X) = X(x)X.
FrobeniusAlgebra khovanov_algebra();

struct FrobeniusMaps {
  Matrix<Integer> f;  // Delta . m
  Matrix<Integer> g;  // (m (x) 1) . (1 (x) Delta)
  Matrix<Integer> h;  // (1 (x) m) . (Delta (x) 1)
};

FrobeniusMaps frobenius_maps(const FrobeniusAlgebra& a);
/// Unit laws, X^2 = 0 for the given tables, and F = G = H.
bool frobenius_check(const FrobeniusAlgebra& a);

Matrix<Integer> kronecker(const Matrix<Integer>& a, const Matrix<Integer>& b);
Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b);

enum class Field { Rational, Mod2 };

/// Columns of a sparse integer matrix: (row, value) pairs.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Integer>>> columns;
};

/*
  Cube of smoothings. A state is a bit mask, bit c set when crossing c takes
  the B-smoothing. With r B-smoothings, n+ positive and n- negative
  crossings, a generator with labels v has

    homological degree  i = r - n-
    quantum degree      j = #1 - #X + r + n+ - 2 n-

  The differential turns one A-site into a B-site, so it runs from n A-sites
  to n-1 A-sites and raises i by one. Over Q the edge changing site k
  carries (-1)^(B-sites before k).
*/
struct CubeComplex {
  struct Generator {
    unsigned long long state = 0;
    unsigned long long labels = 0;  // bit l set: loop l carries X
    int quantum = 0;
  };

  Field field = Field::Rational;
  int crossings = 0;
  int positive = 0;
  int negative = 0;
  /// Chain groups indexed by r = number of B-smoothings.
  std::vector<std::vector<Generator>> chains;
  /// differential[r]: C_r -> C_(r+1).
  std::vector<SparseMatrix> differential;

  int homological(int r) const { return r - negative; }
};

/// TooLarge above 12 crossings or KNOT_MAX_CROSSINGS. `signs` = false drops
/// the edge signs (a deliberately broken complex over Q).
CubeComplex build_complex(const LinkDiagram& d, Field field, bool signs = true);

bool verify_d2(const CubeComplex& c);

/// (homological, quantum) -> rank
using HomologyTable = std::map<std::pair<int, int>, int>;

HomologyTable chain_ranks(const CubeComplex& c);
HomologyTable homology(const CubeComplex& c);

/// sum of (-1)^i q^j rank, in q.
LaurentPoly graded_euler(const HomologyTable& t);

/// (q + q^-1) V with t^(1/2) = -q.
LaurentPoly calibrated_jones(const LaurentPoly& jones_t);

/// Rank over the field; exact.
int matrix_rank(const std::vector<std::vector<Integer>>& rows, Field field);

}  // namespace knot
