#include "knot/states.hpp"

#include "knot/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace knot {

namespace {

void check_star(const LinkDiagram& d, FacePair starred) {
  if (!d.connected()) throw KnotError(ErrorKind::DisconnectedDiagram, "the diagram is split");
  const Universe& u = d.universe();
  const int faces = u.face_count();
  if (starred.first < 0 || starred.second < 0 || starred.first >= faces || starred.second >= faces ||
      !u.faces_adjacent(starred.first, starred.second))
    throw KnotError(ErrorKind::NonAdjacentStars, "faces " + std::to_string(starred.first) + " and " +
                                                     std::to_string(starred.second) + " do not share an edge");
}

bool starred_face(FacePair starred, int f) { return f == starred.first || f == starred.second; }

int marker_face(const LinkDiagram& d, const StateMarking& s, int c) {
  return d.universe().face_of(c, s.quadrant[static_cast<std::size_t>(c)]);
}

int mod4(int k) { return ((k % 4) + 4) % 4; }

}  // namespace

bool is_valid_state(const LinkDiagram& d, const StateMarking& s) {
  if (static_cast<int>(s.quadrant.size()) != d.crossing_count()) return false;
  std::set<int> seen;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int q = s.quadrant[static_cast<std::size_t>(c)];
    if (q < 0 || q > 3) return false;
    const int f = marker_face(d, s, c);
    if (starred_face(s.starred, f) || !seen.insert(f).second) return false;
  }
  return static_cast<int>(seen.size()) + 2 == d.universe().face_count();
}

StateMarking initial_state(const LinkDiagram& d, FacePair starred) {
  check_star(d, starred);
  const Universe& u = d.universe();
  const int n = d.crossing_count();
  std::vector<int> unstarred;
  for (int f = 0; f < u.face_count(); ++f)
    if (!starred_face(starred, f)) unstarred.push_back(f);
  if (static_cast<int>(unstarred.size()) != n)
    throw KnotError(ErrorKind::NoState, "face and crossing counts do not match");

  std::vector<std::vector<int>> touching(static_cast<std::size_t>(u.face_count()));
  for (int c = 0; c < n; ++c)
    for (int q = 0; q < 4; ++q) {
      auto& list = touching[static_cast<std::size_t>(u.face_of(c, q))];
      if (list.empty() || list.back() != c) list.push_back(c);
    }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);  // crossing -> face
  std::vector<bool> visited;
  std::function<bool(int)> augment = [&](int f) {
    for (int c : touching[static_cast<std::size_t>(f)]) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      visited[static_cast<std::size_t>(c)] = true;
      if (owner[static_cast<std::size_t>(c)] < 0 || augment(owner[static_cast<std::size_t>(c)])) {
        owner[static_cast<std::size_t>(c)] = f;
        return true;
      }
    }
    return false;
  };
  for (int f : unstarred) {
    visited.assign(static_cast<std::size_t>(n), false);
    if (!augment(f)) throw KnotError(ErrorKind::NoState, "no face-to-crossing matching covers face " + std::to_string(f));
  }

  StateMarking s;
  s.starred = starred;
  s.quadrant.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    int q = 0;
    while (u.face_of(c, q) != owner[static_cast<std::size_t>(c)]) ++q;
    s.quadrant[static_cast<std::size_t>(c)] = q;
  }
  return s;
}

namespace {

/*
  Clock move at crossings i, j: the markers sit in faces A (at i) and B (at j),
  and turning both one quadrant in the same sense puts i in B and j in A.
  Clockwise advances the quadrant index.
*/
std::optional<StateMarking> move_pair(const LinkDiagram& d, const StateMarking& st, int i, int j, Clock direction) {
  if (i == j) return std::nullopt;
  const Universe& u = d.universe();
  const int step = direction == Clock::Clockwise ? 1 : -1;
  const int qi = st.quadrant[static_cast<std::size_t>(i)], qj = st.quadrant[static_cast<std::size_t>(j)];
  const int a = u.face_of(i, qi), b = u.face_of(j, qj);
  const int ni = mod4(qi + step), nj = mod4(qj + step);
  if (a == b || u.face_of(i, ni) != b || u.face_of(j, nj) != a) return std::nullopt;
  StateMarking out = st;
  out.quadrant[static_cast<std::size_t>(i)] = ni;
  out.quadrant[static_cast<std::size_t>(j)] = nj;
  return out;
}

}  // namespace

StateMarking clock_move(const LinkDiagram& d, const StateMarking& s, int i, int j, Clock direction) {
  if (!is_valid_state(d, s)) throw KnotError(ErrorKind::MoveNotAvailable, "not a valid state");
  if (i >= 0 && j >= 0 && i < d.crossing_count() && j < d.crossing_count())
    if (auto moved = move_pair(d, s, i, j, direction)) return *moved;
  throw KnotError(ErrorKind::MoveNotAvailable,
                  "no clock move between crossings " + std::to_string(i) + " and " + std::to_string(j));
}

std::vector<StateMarking> clock_neighbors(const LinkDiagram& d, const StateMarking& s) {
  std::set<StateMarking> out;
  for (int i = 0; i < d.crossing_count(); ++i)
    for (int j = i + 1; j < d.crossing_count(); ++j)
      for (Clock dir : {Clock::Clockwise, Clock::Counterclockwise})
        if (auto moved = move_pair(d, s, i, j, dir)) out.insert(*moved);
  return {out.begin(), out.end()};
}

std::vector<StateMarking> enumerate_states_brute(const LinkDiagram& d, FacePair starred) {
  check_star(d, starred);
  const Universe& u = d.universe();
  const int n = d.crossing_count();
  std::vector<StateMarking> out;
  StateMarking cur;
  cur.starred = starred;
  cur.quadrant.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(u.face_count()), false);
  std::function<void(int)> place = [&](int c) {
    if (c == n) {
      out.push_back(cur);
      return;
    }
    for (int q = 0; q < 4; ++q) {
      const int f = u.face_of(c, q);
      if (starred_face(starred, f) || used[static_cast<std::size_t>(f)]) continue;
      used[static_cast<std::size_t>(f)] = true;
      cur.quadrant[static_cast<std::size_t>(c)] = q;
      place(c + 1);
      used[static_cast<std::size_t>(f)] = false;
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateMarking> enumerate_states(const LinkDiagram& d, FacePair starred) {
  std::set<StateMarking> seen;
  std::deque<StateMarking> queue;
  StateMarking start = initial_state(d, starred);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    const StateMarking s = std::move(queue.front());
    queue.pop_front();
    for (auto& next : clock_neighbors(d, s))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  std::vector<StateMarking> out(seen.begin(), seen.end());
  if (d.crossing_count() <= 7 && out != enumerate_states_brute(d, starred))
    throw std::logic_error("clock-move closure differs from the brute-force state set");
  return out;
}

int black_hole_quadrant(const LinkDiagram& d, int crossing) { return d.sign(crossing) > 0 ? 0 : 3; }

int black_hole_count(const LinkDiagram& d, const StateMarking& s) {
  int count = 0;
  for (int c = 0; c < d.crossing_count(); ++c) count += s.quadrant[static_cast<std::size_t>(c)] == black_hole_quadrant(d, c);
  return count;
}

int state_permutation_sign(const LinkDiagram& d, const StateMarking& s, const StateSumContext& ctx) {
  const std::size_t n = ctx.face_order.size();
  std::vector<int> perm(n, -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto it = std::find(ctx.face_order.begin(), ctx.face_order.end(), marker_face(d, s, c));
    if (it == ctx.face_order.end()) throw std::invalid_argument("marker on a starred face");
    perm[static_cast<std::size_t>(it - ctx.face_order.begin())] = c;
  }
  int sign = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

StateSumContext state_context(const LinkDiagram& d, FacePair starred) {
  check_star(d, starred);
  StateSumContext ctx;
  for (int f = 0; f < d.universe().face_count(); ++f)
    if (!starred_face(starred, f)) ctx.face_order.push_back(f);
  const StateMarking s = initial_state(d, starred);
  const int parity = black_hole_count(d, s) % 2 == 0 ? 1 : -1;
  ctx.epsilon = parity * state_permutation_sign(d, s, ctx);
  return ctx;
}

LaurentPoly alexander_state_sum(const LinkDiagram& d, FacePair starred) {
  LaurentPoly total;
  for (const auto& s : enumerate_states(d, starred)) {
    LaurentPoly term(black_hole_count(d, s) % 2 == 0 ? 1 : -1);
    for (int c = 0; c < d.crossing_count(); ++c) term *= alexander_label(s.quadrant[static_cast<std::size_t>(c)]);
    total += term;
  }
  return total;
}

ConwayWeightTable derive_conway_weights() {
  ConwayWeightTable table;
  for (int positive = 0; positive < 2; ++positive) {
    // Incoming slots: {0, 1} at a positive crossing, {0, 3} at a negative one.
    const auto incoming = [&](int slot) { return slot == 0 || slot == (positive ? 1 : 3); };
    for (int q = 0; q < 4; ++q) {
      LaurentPoly w = alexander_label(q);
      // Drop the signs.
      const auto& [e, c] = *w.terms().begin();
      w = LaurentPoly::monomial(c < 0 ? Integer(-c) : c, e);
      // x -> x^2, then scale by x^-1.
      w = poly_substitute(w, {1, 8}) * LaurentPoly::power(-1);
      // Quadrants between one incoming and one outgoing strand carry no weight.
      if (incoming(q) != incoming((q + 1) % 4)) w = LaurentPoly(1);
      // Exchange x and x^-1.
      w = poly_substitute(w, {1, -4});
      table.weight[static_cast<std::size_t>(positive)][static_cast<std::size_t>(q)] = w;
    }
  }
  return table;
}

LaurentPoly conway_state_sum(const LinkDiagram& d, FacePair starred) {
  static const ConwayWeightTable table = derive_conway_weights();
  LaurentPoly total;
  for (const auto& s : enumerate_states(d, starred)) {
    LaurentPoly term(black_hole_count(d, s) % 2 == 0 ? 1 : -1);
    for (int c = 0; c < d.crossing_count(); ++c)
      term *= table.weight[d.sign(c) > 0 ? 1 : 0][static_cast<std::size_t>(s.quadrant[static_cast<std::size_t>(c)])];
    total += term;
  }
  return total;
}

LaurentPoly conway_poly(const LinkDiagram& d) {
  if (!d.connected()) return {};
  return conway_state_sum(d, default_star(d));
}

LaurentPoly to_z_form(const LaurentPoly& omega) {
  const LaurentPoly z = LaurentPoly::power(1) - LaurentPoly::power(-1);
  LaurentPoly rest = omega, out;
  while (!rest.is_zero()) {
    const int top = rest.max_exponent();
    if (top < 0 || top % kQuarter != 0)
      throw KnotError(ErrorKind::InexactDivision, "not a polynomial in x - x^-1");
    const Integer c = rest.leading_coefficient();
    rest -= LaurentPoly(c) * z.pow(static_cast<unsigned>(top / kQuarter));
    out += LaurentPoly::monomial(c, top);
  }
  return out;
}

LaurentPoly conway_in_z(const LinkDiagram& d) { return to_z_form(conway_poly(d)); }

SkeinTriple skein_triple(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw KnotError(ErrorKind::InvalidSite, "no crossing " + std::to_string(crossing));
  LinkDiagram plus = d.sign(crossing) > 0 ? d : switch_crossing(d, crossing);
  LinkDiagram minus = switch_crossing(plus, crossing);
  LinkDiagram zero = smooth_oriented(plus, crossing);
  return {std::move(plus), std::move(minus), std::move(zero), crossing};
}

bool skein_check(const LinkDiagram& plus, const LinkDiagram& minus, const LinkDiagram& zero, int crossing) {
  if (crossing < 0 || crossing >= plus.crossing_count() || plus.sign(crossing) < 0)
    throw KnotError(ErrorKind::SiteMismatch, "crossing " + std::to_string(crossing) + " of K+ is not positive");
  if (!isomorphic(minus, switch_crossing(plus, crossing)) || !isomorphic(zero, smooth_oriented(plus, crossing)))
    throw KnotError(ErrorKind::SiteMismatch, "diagrams differ away from crossing " + std::to_string(crossing));
  const LaurentPoly z = LaurentPoly::power(1) - LaurentPoly::power(-1);
  return conway_poly(plus) - conway_poly(minus) == z * conway_poly(zero);
}

bool conway_alexander_bridge(const LinkDiagram& d) {
  return poly_dot_equals(conway_poly(d), poly_substitute(alexander_poly(d), {1, 8})).has_value();
}

}  // namespace knot
