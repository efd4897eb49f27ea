#include "knot/linalg.hpp"

#include <utility>

namespace knot {

LaurentPoly determinant_bareiss(Matrix<LaurentPoly> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(numerator, previous);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

LaurentPoly cofactor_rec(const Matrix<LaurentPoly>& m, std::vector<std::size_t>& columns, std::size_t row) {
  if (row == m.size()) return LaurentPoly(1);
  LaurentPoly total;
  for (std::size_t idx = 0; idx < columns.size(); ++idx) {
    const std::size_t col = columns[idx];
    if (m[row][col].is_zero()) continue;
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(idx));
    LaurentPoly minor = cofactor_rec(m, columns, row + 1);
    columns.insert(columns.begin() + static_cast<std::ptrdiff_t>(idx), col);
    LaurentPoly term = m[row][col] * minor;
    if (idx % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace

LaurentPoly determinant_cofactor(const Matrix<LaurentPoly>& m) {
  std::vector<std::size_t> columns(m.size());
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  return cofactor_rec(m, columns, 0);
}

Integer determinant_integer(Matrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(Matrix<Integer> m, std::size_t columns) {
  const std::size_t rows = m.size();
  Matrix<Integer> v(columns, std::vector<Integer>(columns, 0));
  for (std::size_t i = 0; i < columns; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  };
  // col[b] -= f * col[a]
  auto sub_col = [&](std::size_t b, std::size_t a, const Integer& f) {
    if (f == 0) return;
    for (auto& row : m) row[b] -= f * row[a];
    for (auto& row : v) row[b] -= f * row[a];
  };
  auto sub_row = [&](std::size_t b, std::size_t a, const Integer& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < columns; ++j) m[b][j] -= f * m[a][j];
  };

  std::vector<Integer> invariants;
  std::size_t t = 0;
  while (t < rows && t < columns) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pr = rows, pc = columns;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < columns; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        sub_row(i, t, floor_div(m[i][t], m[t][t]));
        if (m[i][t] != 0) {
          clean = false;
          std::swap(m[t], m[i]);
        }
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (m[t][j] == 0) continue;
        sub_col(j, t, floor_div(m[t][j], m[t][t]));
        if (m[t][j] != 0) {
          clean = false;
          swap_cols(t, j);
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < columns; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = 0; c < columns; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    invariants.push_back(abs(m[t][t]));
    ++t;
  }
  return {std::move(invariants), std::move(v)};
}

ModularKernel kernel_mod(const Matrix<Integer>& m, std::size_t columns, const Integer& modulus) {
  SmithForm snf = smith_normal_form(m, columns);
  ModularKernel out;
  out.count = 1;
  auto reduced_column = [&](std::size_t col, const Integer& scale) {
    std::vector<Integer> g(columns);
    for (std::size_t i = 0; i < columns; ++i) {
      Integer x = (snf.column_transform[i][col] * scale) % modulus;
      if (x < 0) x += modulus;
      g[i] = x;
    }
    return g;
  };
  for (std::size_t i = 0; i < columns; ++i) {
    if (i < snf.invariants.size()) {
      const Integer g = boost::multiprecision::gcd(snf.invariants[i], modulus);
      out.count *= g;
      if (g > 1) out.generators.push_back(reduced_column(i, modulus / g));
    } else {
      out.count *= modulus;
      out.generators.push_back(reduced_column(i, 1));
    }
  }
  return out;
}

}  // namespace knot
