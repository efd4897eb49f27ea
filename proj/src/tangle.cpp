#include "knot/tangle.hpp"

#include "knot/bracket.hpp"
#include "knot/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace knot {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) { throw KnotError(kind, detail); }

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

int max_id(const std::vector<std::array<int, 4>>& crossings, std::initializer_list<std::array<int, 4>> boundaries) {
  int m = 0;
  for (const auto& t : crossings)
    for (int id : t) m = std::max(m, id);
  for (const auto& b : boundaries)
    for (int id : b) m = std::max(m, id);
  return m;
}

std::array<int, 4> shifted(std::array<int, 4> a, int offset) {
  for (int& id : a) id += offset;
  return a;
}

std::vector<std::array<int, 4>> shifted(std::vector<std::array<int, 4>> v, int offset) {
  for (auto& t : v) t = shifted(t, offset);
  return v;
}

std::array<int, 4> switched(const std::array<int, 4>& t) { return {t[1], t[2], t[3], t[0]}; }

/// Result of identifying edge ids: every class must occur twice among the
/// crossings and boundaries; classes that no longer occur become loops.
struct Glued {
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::array<int, 4>> boundaries;
  int free_loops = 0;
};

Glued glue(const std::vector<std::array<int, 4>>& crossings, const std::vector<std::array<int, 4>>& boundaries,
           const std::vector<std::pair<int, int>>& joins, int free_loops) {
  std::map<int, int> index;
  const auto idx = [&](int id) { return index.try_emplace(id, static_cast<int>(index.size())).first->second; };
  for (const auto& t : crossings)
    for (int id : t) idx(id);
  for (const auto& b : boundaries)
    for (int id : b) idx(id);
  for (const auto& [a, b] : joins) {
    idx(a);
    idx(b);
  }
  UnionFind uf(index.size());
  for (const auto& [a, b] : joins) uf.unite(idx(a), idx(b));

  std::vector<int> uses(index.size(), 0);
  std::vector<int> label(index.size(), 0);
  int next = 0;
  const auto relabel = [&](int id) {
    const int root = uf.find(idx(id));
    ++uses[static_cast<std::size_t>(root)];
    if (!label[static_cast<std::size_t>(root)]) label[static_cast<std::size_t>(root)] = ++next;
    return label[static_cast<std::size_t>(root)];
  };
  Glued out;
  for (const auto& t : crossings) out.crossings.push_back({relabel(t[0]), relabel(t[1]), relabel(t[2]), relabel(t[3])});
  for (const auto& b : boundaries) out.boundaries.push_back({relabel(b[0]), relabel(b[1]), relabel(b[2]), relabel(b[3])});
  out.free_loops = free_loops;
  for (const auto& [id, i] : index) {
    if (uf.find(i) != i) continue;
    if (uses[static_cast<std::size_t>(i)] == 0) ++out.free_loops;
    else if (uses[static_cast<std::size_t>(i)] != 2)
      fail(ErrorKind::DanglingEdge, "edge " + std::to_string(id) + " occurs " + std::to_string(uses[static_cast<std::size_t>(i)]) + " time(s)");
  }
  return out;
}

TangleDiagram as_tangle(Glued g) {
  TangleDiagram t;
  t.crossings = std::move(g.crossings);
  t.ends = g.boundaries.at(0);
  t.free_loops = g.free_loops;
  return t;
}

/*
  Planarity with the box boundary as extra 4-valent vertices. The outside
  of a tangle box seen as one vertex reverses the rotational sense, so its
  slots read NW, SW, SE, NE; a hole keeps the sense: NW, NE, SE, SW.
*/
void check_planar(const std::vector<std::array<int, 4>>& crossings, const std::array<int, 4>* outer,
                  const std::array<int, 4>* hole, ErrorKind kind) {
  std::vector<std::array<int, 4>> vertices = crossings;
  if (outer) vertices.push_back({(*outer)[NW], (*outer)[SW], (*outer)[SE], (*outer)[NE]});
  if (hole) vertices.push_back({(*hole)[NW], (*hole)[NE], (*hole)[SE], (*hole)[SW]});
  std::map<int, std::vector<Position>> at;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int k = 0; k < 4; ++k) at[vertices[v][static_cast<std::size_t>(k)]].push_back(make_position(static_cast<int>(v), k));
  std::vector<std::pair<Position, Position>> ends;
  for (const auto& [id, where] : at) {
    if (where.size() != 2)
      fail(kind == ErrorKind::InvalidPattern ? kind : ErrorKind::DanglingEdge,
           "edge " + std::to_string(id) + " occurs " + std::to_string(where.size()) + " time(s)");
    ends.emplace_back(where[0], where[1]);
  }
  const int n = static_cast<int>(vertices.size());
  const Universe u(n, std::move(ends), 0, std::nullopt);
  std::vector<int> count(static_cast<std::size_t>(u.piece_count()), 0), faces(count.size(), 0);
  for (int c = 0; c < n; ++c) ++count[static_cast<std::size_t>(u.piece_of(c))];
  for (const auto& f : u.faces())
    if (!f.empty()) ++faces[static_cast<std::size_t>(u.piece_of(f.front().crossing))];
  for (std::size_t p = 0; p < count.size(); ++p)
    if (faces[p] - count[p] != 2) fail(kind, "the tangle does not embed in a disk with its ends in order");
}

SurgeryPattern as_pattern(Glued g) {
  SurgeryPattern p;
  p.crossings = std::move(g.crossings);
  p.ends = g.boundaries.at(0);
  p.hole = g.boundaries.at(1);
  p.free_loops = g.free_loops;
  return p;
}

void validate_pattern(const SurgeryPattern& p) {
  if (p.free_loops < 0) fail(ErrorKind::InvalidPattern, "negative loop count");
  check_planar(p.crossings, &p.ends, &p.hole, ErrorKind::InvalidPattern);
}

}  // namespace

void validate(const TangleDiagram& t) {
  if (t.free_loops < 0) fail(ErrorKind::SyntaxError, "negative loop count");
  check_planar(t.crossings, &t.ends, nullptr, ErrorKind::NonPlanarError);
}

namespace {

struct ParsedBoundary {
  std::vector<std::array<int, 4>> crossings;
  std::array<std::optional<int>, 4> ends;
  std::vector<std::array<int, 4>> holes;
  int free_loops = 0;
};

ParsedBoundary parse_boundary(std::string_view text, bool allow_hole) {
  static const char* kNames[4] = {"NW", "NE", "SW", "SE"};
  ParsedBoundary out;
  const auto positive = [](long long v) {
    if (v <= 0 || v > 1'000'000'000) fail(ErrorKind::SyntaxError, "edge identifiers must be positive");
    return static_cast<int>(v);
  };
  const auto quad = [&](const PdToken& tok) {
    if (tok.list.size() != 4 || tok.value) fail(ErrorKind::SyntaxError, tok.name + "[...] needs four edge identifiers");
    return std::array<int, 4>{positive(tok.list[0]), positive(tok.list[1]), positive(tok.list[2]), positive(tok.list[3])};
  };
  for (const auto& tok : tokenize_pd(text)) {
    const auto named = std::find(std::begin(kNames), std::end(kNames), tok.name);
    if (tok.name == "X" && tok.has_list) {
      out.crossings.push_back(quad(tok));
    } else if (tok.name == "HOLE" && tok.has_list && allow_hole) {
      out.holes.push_back(quad(tok));
    } else if (tok.name == "unknot" && !tok.has_list && !tok.value) {
      ++out.free_loops;
    } else if (named != std::end(kNames) && tok.value && !tok.has_list) {
      auto& slot = out.ends[static_cast<std::size_t>(named - std::begin(kNames))];
      if (slot) fail(ErrorKind::SyntaxError, tok.name + " given twice");
      slot = positive(*tok.value);
    } else {
      fail(ErrorKind::SyntaxError, "unexpected token '" + tok.name + "'");
    }
  }
  for (std::size_t k = 0; k < 4; ++k)
    if (!out.ends[k]) fail(ErrorKind::SyntaxError, std::string("missing ") + kNames[k] + "=");
  return out;
}

std::array<int, 4> unwrap(const std::array<std::optional<int>, 4>& ends) { return {*ends[0], *ends[1], *ends[2], *ends[3]}; }

}  // namespace

TangleDiagram parse_tangle(std::string_view text) {
  ParsedBoundary b = parse_boundary(text, false);
  TangleDiagram t;
  t.crossings = std::move(b.crossings);
  t.ends = unwrap(b.ends);
  t.free_loops = b.free_loops;
  validate(t);
  return t;
}

std::string to_text(const TangleDiagram& t) {
  std::ostringstream os;
  for (const auto& x : t.crossings) os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "] ";
  os << "NW=" << t.ends[NW] << " NE=" << t.ends[NE] << " SW=" << t.ends[SW] << " SE=" << t.ends[SE];
  for (int i = 0; i < t.free_loops; ++i) os << " unknot";
  return os.str();
}

TangleDiagram zero_tangle() { return {{}, {1, 1, 2, 2}, 0}; }
TangleDiagram infinity_tangle() { return {{}, {1, 2, 1, 2}, 0}; }

TangleDiagram twist_tangle(int sign) {
  TangleDiagram t{{{1, 2, 3, 4}}, {}, 0};
  t.ends[NE] = 1;
  t.ends[SE] = 2;
  t.ends[SW] = 3;
  t.ends[NW] = 4;
  if (sign < 0) t.crossings[0] = switched(t.crossings[0]);
  return t;
}

TangleDiagram tangle_sum(const TangleDiagram& t, const TangleDiagram& s) {
  const int offset = max_id(t.crossings, {t.ends});
  auto crossings = t.crossings;
  for (const auto& x : shifted(s.crossings, offset)) crossings.push_back(x);
  const auto se = shifted(s.ends, offset);
  return as_tangle(glue(crossings, {{t.ends[NW], se[NE], t.ends[SW], se[SE]}},
                        {{t.ends[NE], se[NW]}, {t.ends[SE], se[SW]}}, t.free_loops + s.free_loops));
}

TangleDiagram tangle_product(const TangleDiagram& t, const TangleDiagram& s) {
  const int offset = max_id(t.crossings, {t.ends});
  auto crossings = t.crossings;
  for (const auto& x : shifted(s.crossings, offset)) crossings.push_back(x);
  const auto se = shifted(s.ends, offset);
  return as_tangle(glue(crossings, {{t.ends[NW], t.ends[NE], se[SW], se[SE]}},
                        {{t.ends[SW], se[NW]}, {t.ends[SE], se[NE]}}, t.free_loops + s.free_loops));
}

TangleDiagram tangle_rotate(const TangleDiagram& t) {
  TangleDiagram r = t;
  r.ends[NE] = t.ends[NW];
  r.ends[SE] = t.ends[NE];
  r.ends[SW] = t.ends[SE];
  r.ends[NW] = t.ends[SW];
  return r;
}

TangleDiagram tangle_mirror(const TangleDiagram& t) {
  TangleDiagram r = t;
  for (auto& x : r.crossings) x = switched(x);
  return r;
}

BracketVector tangle_bracket(const TangleDiagram& t) {
  const int n = t.crossing_count();
  if (n > enumeration_limit(24))
    fail(ErrorKind::TooLarge, std::to_string(n) + " crossings exceed the enumeration limit");
  std::map<int, int> index;
  const auto idx = [&](int id) { return index.try_emplace(id, static_cast<int>(index.size())).first->second; };
  std::vector<std::array<int, 4>> dense;
  for (const auto& x : t.crossings) dense.push_back({idx(x[0]), idx(x[1]), idx(x[2]), idx(x[3])});
  const std::array<int, 4> ends{idx(t.ends[0]), idx(t.ends[1]), idx(t.ends[2]), idx(t.ends[3])};
  const std::size_t ids = index.size();

  // counts[connectivity][#A][loops]
  std::vector<std::vector<std::vector<long long>>> counts(
      2, std::vector<std::vector<long long>>(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(n) + 2, 0)));
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    UnionFind uf(ids);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = dense[static_cast<std::size_t>(c)];
      if (mask >> c & 1ULL) {
        uf.unite(x[0], x[1]);
        uf.unite(x[2], x[3]);
      } else {
        ++a_count;
        uf.unite(x[0], x[3]);
        uf.unite(x[1], x[2]);
      }
    }
    int classes = 0;
    for (std::size_t i = 0; i < ids; ++i) classes += uf.find(static_cast<int>(i)) == static_cast<int>(i);
    const int loops = classes - 2;
    const std::size_t kind = uf.find(ends[NW]) == uf.find(ends[NE]) ? 0 : 1;
    ++counts[kind][static_cast<std::size_t>(a_count)][static_cast<std::size_t>(loops)];
  }
  const LaurentPoly delta = bracket_delta();
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  BracketVector out;
  for (std::size_t kind = 0; kind < 2; ++kind)
    for (int a = 0; a <= n; ++a)
      for (std::size_t loops = 0; loops < counts[kind][static_cast<std::size_t>(a)].size(); ++loops) {
        const long long k = counts[kind][static_cast<std::size_t>(a)][loops];
        if (!k) continue;
        while (delta_pow.size() <= loops + static_cast<std::size_t>(t.free_loops)) delta_pow.push_back(delta_pow.back() * delta);
        const LaurentPoly term = LaurentPoly::monomial(Integer(k), kQuarter * (2 * a - n)) *
                                 delta_pow[loops + static_cast<std::size_t>(t.free_loops)];
        (kind == 0 ? out.alpha : out.beta) += term;
      }
  return out;
}

LinkDiagram closure(const TangleDiagram& t, Closure kind) {
  PlanarAssembly a;
  a.crossings = t.crossings;
  a.free_loops = t.free_loops;
  if (kind == Closure::Numerator)
    a.joins = {{t.ends[NW], t.ends[NE]}, {t.ends[SW], t.ends[SE]}};
  else
    a.joins = {{t.ends[NW], t.ends[SW]}, {t.ends[NE], t.ends[SE]}};
  return assemble(a);
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

Matrix2 transpose(const Matrix2& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }
Matrix2 identity_matrix2() { return {{{LaurentPoly(1), LaurentPoly()}, {LaurentPoly(), LaurentPoly(1)}}}; }
LaurentPoly det(const Matrix2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
Matrix2 adjugate(const Matrix2& a) { return {{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}}; }

Matrix2 closure_matrix() {
  const LaurentPoly d = bracket_delta();
  return {{{d, LaurentPoly(1)}, {LaurentPoly(1), d}}};
}

LinkDiagram hopf_pairing(const TangleDiagram& t, const TangleDiagram& u) {
  const int offset = max_id(t.crossings, {t.ends});
  const auto uc = shifted(u.crossings, offset);
  const auto ue = shifted(u.ends, offset);
  const int p_mid = max_id(uc, {ue, t.ends}) + 1, q_mid = p_mid + 1;
  PlanarAssembly a;
  a.crossings = t.crossings;
  a.crossings.insert(a.crossings.end(), uc.begin(), uc.end());
  a.crossings.push_back({ue[NW], t.ends[SW], q_mid, p_mid});
  a.crossings.push_back({p_mid, q_mid, t.ends[SE], ue[NE]});
  a.joins = {{t.ends[NW], t.ends[NE]}, {ue[SW], ue[SE]}};
  a.free_loops = t.free_loops + u.free_loops;
  return assemble(a);
}

Matrix2 hopf_matrix() {
  static const Matrix2 m = [] {
    const TangleDiagram basis[2] = {zero_tangle(), infinity_tangle()};
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) out[i][j] = bracket(hopf_pairing(basis[i], basis[j]));
    return out;
  }();
  return m;
}

LaurentPoly pairing_value(const BracketVector& t, const Matrix2& m, const BracketVector& u) {
  const LaurentPoly tv[2] = {t.alpha, t.beta}, uv[2] = {u.alpha, u.beta};
  LaurentPoly out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out += tv[i] * m[i][j] * uv[j];
  return out;
}

SurgeryPattern parse_pattern(std::string_view text) {
  ParsedBoundary b = parse_boundary(text, true);
  if (b.holes.size() != 1)
    fail(ErrorKind::InvalidPattern, "a pattern needs exactly one HOLE[...], found " + std::to_string(b.holes.size()));
  SurgeryPattern p;
  p.crossings = std::move(b.crossings);
  p.ends = unwrap(b.ends);
  p.hole = b.holes.front();
  p.free_loops = b.free_loops;
  validate_pattern(p);
  return p;
}

SurgeryPattern identity_pattern() { return {{}, {1, 2, 3, 4}, {1, 2, 3, 4}, 0}; }

SurgeryPattern sum_pattern(const TangleDiagram& right) {
  const std::array<int, 4> hole{1, 2, 3, 4};
  const auto rc = shifted(right.crossings, 4);
  const auto re = shifted(right.ends, 4);
  SurgeryPattern p = as_pattern(glue(rc, {{hole[NW], re[NE], hole[SW], re[SE]}, hole},
                                     {{hole[NE], re[NW]}, {hole[SE], re[SW]}}, right.free_loops));
  validate_pattern(p);
  return p;
}

SurgeryPattern product_pattern(const TangleDiagram& below) {
  const std::array<int, 4> hole{1, 2, 3, 4};
  const auto bc = shifted(below.crossings, 4);
  const auto be = shifted(below.ends, 4);
  SurgeryPattern p = as_pattern(glue(bc, {{hole[NW], hole[NE], be[SW], be[SE]}, hole},
                                     {{hole[SW], be[NW]}, {hole[SE], be[NE]}}, below.free_loops));
  validate_pattern(p);
  return p;
}

SurgeryPattern mirror_pattern(const SurgeryPattern& p) {
  SurgeryPattern r = p;
  for (auto& x : r.crossings) x = switched(x);
  return r;
}

SurgeryPattern compose_patterns(const SurgeryPattern& p, const SurgeryPattern& q) {
  const int offset = max_id(p.crossings, {p.ends, p.hole});
  auto crossings = p.crossings;
  for (const auto& x : shifted(q.crossings, offset)) crossings.push_back(x);
  const auto qe = shifted(q.ends, offset), qh = shifted(q.hole, offset);
  std::vector<std::pair<int, int>> joins;
  for (std::size_t k = 0; k < 4; ++k) joins.emplace_back(p.ends[k], qh[k]);
  return as_pattern(glue(crossings, {qe, p.hole}, joins, p.free_loops + q.free_loops));
}

TangleDiagram omega_surgery(const TangleDiagram& t, const SurgeryPattern& pattern, bool inverse) {
  const SurgeryPattern p = inverse ? mirror_pattern(pattern) : pattern;
  const int offset = max_id(p.crossings, {p.ends, p.hole});
  auto crossings = p.crossings;
  for (const auto& x : shifted(t.crossings, offset)) crossings.push_back(x);
  const auto te = shifted(t.ends, offset);
  std::vector<std::pair<int, int>> joins;
  for (std::size_t k = 0; k < 4; ++k) joins.emplace_back(p.hole[k], te[k]);
  return as_tangle(glue(crossings, {p.ends}, joins, p.free_loops + t.free_loops));
}

Matrix2 omega_matrix(const SurgeryPattern& p, bool inverse) {
  const BracketVector zero = tangle_bracket(omega_surgery(zero_tangle(), p, inverse));
  const BracketVector inf = tangle_bracket(omega_surgery(infinity_tangle(), p, inverse));
  return {{{zero.alpha, inf.alpha}, {zero.beta, inf.beta}}};
}

ConservationReport conservation_report(const SurgeryPattern& p) {
  ConservationReport r;
  r.omega = omega_matrix(p, false);
  r.omega_bar = omega_matrix(p, true);
  r.m = hopf_matrix();
  const LaurentPoly d = det(r.omega);
  if (d.is_zero()) fail(ErrorKind::SingularOmega, "det(Omega) = 0");
  // Omega^t M Omega^-1 = M  <=>  Omega^t M adj(Omega) = det(Omega) M
  const Matrix2 lhs = transpose(r.omega) * r.m * adjugate(r.omega);
  Matrix2 rhs = r.m;
  for (auto& row : rhs)
    for (auto& x : row) x *= d;
  r.identity = lhs == rhs;
  r.mirror_inverse = r.omega_bar * r.omega == identity_matrix2();
  return r;
}

bool conservation_check(const SurgeryPattern& p) { return conservation_report(p).passes(); }

std::optional<PairingWitness> find_pairing_witness(const SurgeryPattern& p,
                                                   const std::vector<TangleDiagram>& candidates) {
  for (const auto& t : candidates)
    for (const auto& u : candidates) {
      const LaurentPoly before = bracket(hopf_pairing(t, u));
      const LaurentPoly after = bracket(hopf_pairing(omega_surgery(t, p, false), omega_surgery(u, p, true)));
      if (before != after) return PairingWitness{t, u, before, after};
    }
  return std::nullopt;
}

}  // namespace knot
