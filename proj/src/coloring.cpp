#include "knot/coloring.hpp"

#include <numeric>
#include <stdexcept>

namespace knot {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

Integer reduce(const Integer& v, const Integer& n) {
  Integer r = v % n;
  return r < 0 ? r + n : r;
}

bool satisfies(const Matrix<Integer>& m, const std::vector<Integer>& x, const Integer& n) {
  for (const auto& row : m) {
    Integer sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) sum += row[i] * x[i];
    if (reduce(sum, n) != 0) return false;
  }
  return true;
}

ColoringSpace solve(const Matrix<Integer>& m, std::size_t columns, const Integer& modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  ModularKernel k = kernel_mod(m, columns, modulus);
  ColoringSpace out;
  out.modulus = modulus;
  out.count = k.count;
  out.nonconstant = k.count - modulus;
  out.basis = std::move(k.generators);
  return out;
}

}  // namespace

ArcDecomposition arcs(const LinkDiagram& d) {
  const int e = d.edge_count();
  std::vector<int> parent(static_cast<std::size_t>(e));
  std::iota(parent.begin(), parent.end(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int a = find(parent, d.edge_at(c, 1)), b = find(parent, d.edge_at(c, 3));
    parent[static_cast<std::size_t>(a)] = b;
  }
  ArcDecomposition out;
  out.arc_of_edge.assign(static_cast<std::size_t>(e), -1);
  std::vector<int> index(static_cast<std::size_t>(e), -1);
  for (int i = 0; i < e; ++i) {
    int& slot = index[static_cast<std::size_t>(find(parent, i))];
    if (slot < 0) slot = out.count++;
    out.arc_of_edge[static_cast<std::size_t>(i)] = slot;
  }
  out.count += d.free_loops();
  return out;
}

Matrix<Integer> fox_matrix(const LinkDiagram& d, const ArcDecomposition& a) {
  Matrix<Integer> m(static_cast<std::size_t>(d.crossing_count()),
                    std::vector<Integer>(static_cast<std::size_t>(a.count), Integer(0)));
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& row = m[static_cast<std::size_t>(c)];
    const auto arc = [&](int slot) { return static_cast<std::size_t>(a.arc_of_edge[static_cast<std::size_t>(d.edge_at(c, slot))]); };
    row[arc(0)] += 1;
    row[arc(2)] += 1;
    row[arc(1)] -= 2;
  }
  return m;
}

Matrix<Integer> region_matrix(const LinkDiagram& d) {
  const Universe& u = d.universe();
  Matrix<Integer> m(static_cast<std::size_t>(d.crossing_count()),
                    std::vector<Integer>(static_cast<std::size_t>(u.face_count()), Integer(0)));
  static constexpr int kSign[4] = {1, 1, -1, -1};
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int q = 0; q < 4; ++q) m[static_cast<std::size_t>(c)][static_cast<std::size_t>(u.face_of(c, q))] += kSign[q];
  return m;
}

ColoringSpace fox_colorings(const LinkDiagram& d, const Integer& modulus) {
  const ArcDecomposition a = arcs(d);
  return solve(fox_matrix(d, a), static_cast<std::size_t>(a.count), modulus);
}

ColoringSpace region_colorings(const LinkDiagram& d, const Integer& modulus) {
  return solve(region_matrix(d), static_cast<std::size_t>(d.universe().face_count()), modulus);
}

bool is_fox_coloring(const LinkDiagram& d, const FoxColoring& c) {
  const ArcDecomposition a = arcs(d);
  return c.labels.size() == static_cast<std::size_t>(a.count) && satisfies(fox_matrix(d, a), c.labels, c.modulus);
}

bool is_region_coloring(const LinkDiagram& d, const RegionColoring& c) {
  return c.labels.size() == static_cast<std::size_t>(d.universe().face_count()) &&
         satisfies(region_matrix(d), c.labels, c.modulus);
}

FoxColoring region_to_fox(const LinkDiagram& d, const RegionColoring& rc) {
  if (!is_region_coloring(d, rc)) throw std::invalid_argument("not a region coloring");
  const ArcDecomposition a = arcs(d);
  FoxColoring out;
  out.modulus = rc.modulus;
  out.labels.assign(static_cast<std::size_t>(a.count), Integer(0));
  const auto face = [&](int f) { return rc.labels[static_cast<std::size_t>(f)]; };
  for (int e = 0; e < d.edge_count(); ++e)
    out.labels[static_cast<std::size_t>(a.arc_of_edge[static_cast<std::size_t>(e)])] =
        reduce(face(d.left_face(e)) + face(d.right_face(e)), rc.modulus);
  if (d.crossing_count() == 0)
    for (int k = 0; k < d.free_loops(); ++k)
      out.labels[static_cast<std::size_t>(k)] = reduce(face(k) + face(k + 1), rc.modulus);
  return out;
}

}  // namespace knot
