#include "knot/khovanov.hpp"

#include "knot/error.hpp"

#include <algorithm>
#include <numeric>

namespace knot {

Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<Integer> out(n, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

Matrix<Integer> kronecker(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  const std::size_t ar = a.size(), ac = a.empty() ? 0 : a[0].size();
  const std::size_t br = b.size(), bc = b.empty() ? 0 : b[0].size();
  Matrix<Integer> out(ar * br, std::vector<Integer>(ac * bc, Integer(0)));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

FrobeniusAlgebra khovanov_algebra() {
  FrobeniusAlgebra a;
  // columns: 1(x)1, 1(x)X, X(x)1, X(x)X
  a.m = {{1, 0, 0, 0}, {0, 1, 1, 0}};
  // rows: 1(x)1, 1(x)X, X(x)1, X(x)X; columns: 1, X
  a.delta = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  return a;
}

FrobeniusMaps frobenius_maps(const FrobeniusAlgebra& a) {
  const Matrix<Integer> one = {{1, 0}, {0, 1}};
  FrobeniusMaps f;
  f.f = multiply(a.delta, a.m);
  f.g = multiply(kronecker(a.m, one), kronecker(one, a.delta));
  f.h = multiply(kronecker(one, a.m), kronecker(a.delta, one));
  return f;
}

bool frobenius_check(const FrobeniusAlgebra& a) {
  // m(1 (x) v) = v = m(v (x) 1)
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t r = 0; r < 2; ++r)
      if (a.m[r][v] != (r == v ? 1 : 0) || a.m[r][2 * v] != (r == v ? 1 : 0)) return false;
  if (a.m[0][3] != 0 || a.m[1][3] != 0) return false;
  const FrobeniusMaps f = frobenius_maps(a);
  return f.f == f.g && f.g == f.h;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

/// Loops of one smoothing: loop index per diagram edge, free loops last.
struct Resolution {
  std::vector<int> loop_of_edge;
  int loops = 0;
};

Resolution resolve(const LinkDiagram& d, unsigned long long state) {
  const int e = d.edge_count();
  UnionFind uf(static_cast<std::size_t>(e));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto at = [&](int slot) { return d.edge_at(c, slot); };
    if (state >> c & 1ULL) {
      uf.unite(at(0), at(1));
      uf.unite(at(2), at(3));
    } else {
      uf.unite(at(0), at(3));
      uf.unite(at(1), at(2));
    }
  }
  Resolution r;
  r.loop_of_edge.assign(static_cast<std::size_t>(e), -1);
  std::vector<int> index(static_cast<std::size_t>(e), -1);
  for (int i = 0; i < e; ++i) {
    int& slot = index[static_cast<std::size_t>(uf.find(i))];
    if (slot < 0) slot = r.loops++;
    r.loop_of_edge[static_cast<std::size_t>(i)] = slot;
  }
  r.loops += d.free_loops();
  return r;
}

int popcount(unsigned long long x) { return __builtin_popcountll(x); }

Integer reduce(const Integer& v, Field f) {
  if (f == Field::Rational) return v;
  Integer r = v % 2;
  return r < 0 ? r + 2 : r;
}

}  // namespace

CubeComplex build_complex(const LinkDiagram& d, Field field, bool signs) {
  const int n = d.crossing_count();
  if (n > enumeration_limit(12))
    throw KnotError(ErrorKind::TooLarge, std::to_string(n) + " crossings exceed the Khovanov limit");
  const FrobeniusAlgebra alg = khovanov_algebra();

  CubeComplex c;
  c.field = field;
  c.crossings = n;
  c.negative = d.negative_crossings();
  c.positive = n - c.negative;
  c.chains.assign(static_cast<std::size_t>(n) + 1, {});

  const unsigned long long states = 1ULL << n;
  std::vector<Resolution> res;
  res.reserve(states);
  // offset of the first generator of each state inside its chain group
  std::vector<int> offset(states, 0);
  for (unsigned long long s = 0; s < states; ++s) {
    res.push_back(resolve(d, s));
    const int r = popcount(s);
    auto& group = c.chains[static_cast<std::size_t>(r)];
    offset[s] = static_cast<int>(group.size());
    const int loops = res.back().loops;
    for (unsigned long long v = 0; v < (1ULL << loops); ++v) {
      const int xs = popcount(v);
      group.push_back({s, v, (loops - xs) - xs + r + c.positive - 2 * c.negative});
    }
  }

  for (int r = 0; r < n; ++r) {
    SparseMatrix m;
    m.cols = static_cast<int>(c.chains[static_cast<std::size_t>(r)].size());
    m.rows = static_cast<int>(c.chains[static_cast<std::size_t>(r) + 1].size());
    m.columns.assign(static_cast<std::size_t>(m.cols), {});
    c.differential.push_back(std::move(m));
  }

  for (unsigned long long s = 0; s < states; ++s) {
    const int r = popcount(s);
    const Resolution& from = res[s];
    for (int k = 0; k < n; ++k) {
      if (s >> k & 1ULL) continue;
      const unsigned long long t = s | (1ULL << k);
      const Resolution& to = res[t];
      const int sign = signs && field == Field::Rational && popcount(s & ((1ULL << k) - 1)) % 2 ? -1 : 1;
      // Loop correspondence through shared edges; the free loops keep their order.
      std::vector<int> image(static_cast<std::size_t>(from.loops), -1);
      for (int e = 0; e < d.edge_count(); ++e)
        image[static_cast<std::size_t>(from.loop_of_edge[static_cast<std::size_t>(e)])] =
            to.loop_of_edge[static_cast<std::size_t>(e)];
      for (int f = 0; f < d.free_loops(); ++f)
        image[static_cast<std::size_t>(from.loops - 1 - f)] = to.loops - 1 - f;
      const int a = from.loop_of_edge[static_cast<std::size_t>(d.edge_at(k, 0))];
      const int b = from.loop_of_edge[static_cast<std::size_t>(d.edge_at(k, 1))];
      const bool merge = a != b;
      // For a split, the two new loops: the one through slot 0 and the one through slot 2.
      const int left = to.loop_of_edge[static_cast<std::size_t>(d.edge_at(k, 0))];
      const int right = to.loop_of_edge[static_cast<std::size_t>(d.edge_at(k, 2))];

      auto& column_block = c.differential[static_cast<std::size_t>(r)].columns;
      for (unsigned long long v = 0; v < (1ULL << from.loops); ++v) {
        unsigned long long rest = 0;  // labels of the untouched loops, in target numbering
        for (int l = 0; l < from.loops; ++l)
          if (l != a && l != b && (v >> l & 1ULL)) rest |= 1ULL << image[static_cast<std::size_t>(l)];
        auto& col = column_block[static_cast<std::size_t>(offset[s]) + v];
        const auto emit = [&](unsigned long long labels, const Integer& coeff) {
          const Integer value = reduce(coeff * sign, field);
          if (value != 0) col.emplace_back(offset[t] + static_cast<int>(labels), value);
        };
        if (merge) {
          const std::size_t in = 2 * (v >> a & 1ULL) + (v >> b & 1ULL);
          const int target = image[static_cast<std::size_t>(a)];
          for (std::size_t out = 0; out < 2; ++out)
            if (alg.m[out][in] != 0) emit(rest | (static_cast<unsigned long long>(out) << target), alg.m[out][in]);
        } else {
          const std::size_t in = v >> a & 1ULL;
          for (std::size_t out = 0; out < 4; ++out)
            if (alg.delta[out][in] != 0)
              emit(rest | (static_cast<unsigned long long>(out >> 1) << left) | (static_cast<unsigned long long>(out & 1) << right),
                   alg.delta[out][in]);
        }
      }
    }
  }
  return c;
}

bool verify_d2(const CubeComplex& c) {
  for (std::size_t r = 0; r + 1 < c.differential.size(); ++r) {
    const SparseMatrix& first = c.differential[r];
    const SparseMatrix& second = c.differential[r + 1];
    for (const auto& col : first.columns) {
      std::map<int, Integer> acc;
      for (const auto& [mid, x] : col)
        for (const auto& [row, y] : second.columns[static_cast<std::size_t>(mid)]) acc[row] += x * y;
      for (const auto& [row, v] : acc)
        if (reduce(v, c.field) != 0) return false;
    }
  }
  return true;
}

int matrix_rank(const std::vector<std::vector<Integer>>& input, Field field) {
  std::vector<std::vector<Integer>> rows = input;
  for (auto& row : rows)
    for (auto& x : row) x = reduce(x, field);
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  int rank = 0;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    const auto& p = rows[next];
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      auto& row = rows[i];
      if (field == Field::Mod2) {
        for (std::size_t j = col; j < cols; ++j) row[j] = (row[j] + p[j]) % 2;
      } else {
        // row <- p[col] * row - row[col] * p, then strip the content.
        const Integer a = p[col], b = row[col];
        Integer g = 0;
        for (std::size_t j = col; j < cols; ++j) {
          row[j] = a * row[j] - b * p[j];
          g = boost::multiprecision::gcd(g, row[j]);
        }
        if (g > 1)
          for (std::size_t j = col; j < cols; ++j) row[j] /= g;
      }
    }
    ++next;
    ++rank;
  }
  return rank;
}

HomologyTable chain_ranks(const CubeComplex& c) {
  HomologyTable t;
  for (std::size_t r = 0; r < c.chains.size(); ++r)
    for (const auto& g : c.chains[r]) ++t[{c.homological(static_cast<int>(r)), g.quantum}];
  return t;
}

namespace {

/// Rank of differential[r] restricted to quantum degree j.
int block_rank(const CubeComplex& c, std::size_t r, int j) {
  if (r >= c.differential.size()) return 0;
  const SparseMatrix& m = c.differential[r];
  std::vector<int> row_index(static_cast<std::size_t>(m.rows), -1);
  int rows = 0;
  for (std::size_t i = 0; i < c.chains[r + 1].size(); ++i)
    if (c.chains[r + 1][i].quantum == j) row_index[i] = rows++;
  std::vector<std::vector<Integer>> dense;
  for (std::size_t col = 0; col < c.chains[r].size(); ++col) {
    if (c.chains[r][col].quantum != j) continue;
    std::vector<Integer> v(static_cast<std::size_t>(rows), Integer(0));
    bool any = false;
    for (const auto& [row, x] : m.columns[col]) {
      v[static_cast<std::size_t>(row_index[static_cast<std::size_t>(row)])] += x;
      any = true;
    }
    if (any) dense.push_back(std::move(v));
  }
  return matrix_rank(dense, c.field);
}

}  // namespace

HomologyTable homology(const CubeComplex& c) {
  HomologyTable out;
  const HomologyTable chains = chain_ranks(c);
  for (const auto& [key, dim] : chains) {
    const auto [i, j] = key;
    const std::size_t r = static_cast<std::size_t>(i + c.negative);
    const int outgoing = block_rank(c, r, j);
    const int incoming = r == 0 ? 0 : block_rank(c, r - 1, j);
    const int rank = dim - outgoing - incoming;
    if (rank > 0) out[key] = rank;
  }
  return out;
}

LaurentPoly graded_euler(const HomologyTable& t) {
  LaurentPoly out;
  for (const auto& [key, rank] : t)
    out += LaurentPoly::monomial(Integer(key.first % 2 == 0 ? rank : -rank), key.second * kQuarter);
  return out;
}

LaurentPoly calibrated_jones(const LaurentPoly& jones_t) {
  // t -> s^2 with s = t^(1/2), then s -> -q
  const LaurentPoly in_q = poly_substitute(poly_substitute(jones_t, {1, 8}), {-1, 4});
  return in_q * (LaurentPoly::power(1) + LaurentPoly::power(-1));
}

}  // namespace knot
