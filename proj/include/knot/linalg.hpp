#pragma once

#include "knot/poly.hpp"

#include <vector>

namespace knot {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) determinant over the Laurent ring. The empty
/// matrix has determinant 1.
LaurentPoly determinant_bareiss(Matrix<LaurentPoly> m);

/// Laplace expansion along the first row. Exponential; meant for small
/// matrices as a cross-check of the Bareiss path.
LaurentPoly determinant_cofactor(const Matrix<LaurentPoly>& m);

/// Bareiss determinant of an integer matrix.
Integer determinant_integer(Matrix<Integer> m);

/// Smith form of an integer matrix: U * M * V = diag(d_1, ..., d_r, 0, ...)
/// with d_i | d_{i+1}. Only V is tracked, which is all the solution
/// spaces need.
struct SmithForm {
  std::vector<Integer> invariants;  // nonzero d_i, in order
  Matrix<Integer> column_transform;  // V, n x n, unimodular
};

SmithForm smith_normal_form(Matrix<Integer> m, std::size_t columns);

/// Solution space of M x = 0 over Z/N.
struct ModularKernel {
  Integer count;
  std::vector<std::vector<Integer>> generators;  // entries reduced into [0, N)
};

ModularKernel kernel_mod(const Matrix<Integer>& m, std::size_t columns, const Integer& modulus);

}  // namespace knot
