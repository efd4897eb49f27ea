#include "knot/reidemeister.hpp"

#include "knot/error.hpp"

#include <algorithm>

namespace knot {

namespace {

[[noreturn]] void invalid(const std::string& detail) { throw KnotError(ErrorKind::InvalidSite, detail); }

long long next_label(const DiagramData& data) {
  long long top = 0;
  for (long long l : data.labels) top = std::max(top, l);
  return top + 1;
}

const std::vector<Corner>& face_corners(const LinkDiagram& d, int face) {
  if (face < 0 || face >= d.universe().face_count()) invalid("no face " + std::to_string(face));
  return d.universe().faces()[static_cast<std::size_t>(face)];
}

LinkDiagram insert_curl(const LinkDiagram& d, int sign, const MoveSite& site) {
  // Slots of the new crossing: strand in, strand out, loop tail, loop head.
  struct Layout {
    int in, out, loop_tail, loop_head;
  };
  static constexpr Layout kLayouts[2][2] = {
      {{0, 1, 2, 3}, {3, 2, 1, 0}},  // negative: under-first, over-first
      {{0, 3, 2, 1}, {1, 2, 3, 0}},  // positive
  };
  const Layout l = kLayouts[sign > 0 ? 1 : 0][site.over_first ? 1 : 0];
  DiagramData data = d.data();
  const int c = data.crossings++;
  const long long label = next_label(data);
  if (site.edge < 0) {
    if (data.free_loops == 0) invalid("no free loop to curl");
    --data.free_loops;
    data.edges.push_back({make_position(c, l.out), make_position(c, l.in)});
  } else {
    if (site.edge >= d.edge_count()) invalid("no edge " + std::to_string(site.edge));
    auto& e = data.edges[static_cast<std::size_t>(site.edge)];
    const Position head = e.head;
    e.head = make_position(c, l.in);
    data.edges.push_back({make_position(c, l.out), head});
  }
  data.edges.push_back({make_position(c, l.loop_tail), make_position(c, l.loop_head)});
  data.labels.push_back(label);
  data.labels.push_back(label + 1);
  return renumbered(LinkDiagram(std::move(data)));
}

/*
  R2 picture: edge a runs along y = 0 with the face above it, edge b along
  y = 1 with the face below it. A finger of a rises through b at X (x = -1)
  and comes back down through b at Y (x = +1). Around each new crossing the
  slots run S, W, N, E before rotating the incoming under-strand to slot 0.
*/
LinkDiagram insert_bigon(const LinkDiagram& d, const MoveSite& site) {
  const auto incidences = faces(d);
  if (site.face < 0 || site.face >= static_cast<int>(incidences.size())) invalid("no face " + std::to_string(site.face));
  const auto& inc = incidences[static_cast<std::size_t>(site.face)];
  const auto in_range = [&](int i) { return i >= 0 && i < static_cast<int>(inc.size()); };
  if (!in_range(site.side_a) || !in_range(site.side_b) || site.side_a == site.side_b) invalid("bad R2 sides");
  const int a = inc[static_cast<std::size_t>(site.side_a)].edge;
  const int b = inc[static_cast<std::size_t>(site.side_b)].edge;
  if (a == b) invalid("R2 needs two different edges");
  const bool a_plus = inc[static_cast<std::size_t>(site.side_a)].left;
  const bool b_plus = !inc[static_cast<std::size_t>(site.side_b)].left;

  enum Piece { aL, aM, aR, bL, bM, bR };
  DiagramData data = d.data();
  const int x = data.crossings, y = data.crossings + 1;
  data.crossings += 2;

  const bool under_is_b = site.a_over;
  std::array<Piece, 4> cyc_x = {aL, bL, aM, bM};
  std::array<Piece, 4> cyc_y = {aR, bM, aM, bR};
  const Piece enter_x = under_is_b ? (b_plus ? bL : bM) : (a_plus ? aL : aM);
  const Piece enter_y = under_is_b ? (b_plus ? bM : bR) : (a_plus ? aM : aR);
  std::rotate(cyc_x.begin(), std::find(cyc_x.begin(), cyc_x.end(), enter_x), cyc_x.end());
  std::rotate(cyc_y.begin(), std::find(cyc_y.begin(), cyc_y.end(), enter_y), cyc_y.end());
  const auto at_x = [&](Piece p) {
    return make_position(x, static_cast<int>(std::find(cyc_x.begin(), cyc_x.end(), p) - cyc_x.begin()));
  };
  const auto at_y = [&](Piece p) {
    return make_position(y, static_cast<int>(std::find(cyc_y.begin(), cyc_y.end(), p) - cyc_y.begin()));
  };

  const Position la = a_plus ? d.tail(a) : d.head(a), ra = a_plus ? d.head(a) : d.tail(a);
  const Position lb = b_plus ? d.tail(b) : d.head(b), rb = b_plus ? d.head(b) : d.tail(b);
  const auto directed = [](Position left, Position right, bool plus) {
    return plus ? DirectedEdge{left, right} : DirectedEdge{right, left};
  };
  data.edges[static_cast<std::size_t>(a)] = directed(la, at_x(aL), a_plus);
  data.edges[static_cast<std::size_t>(b)] = directed(lb, at_x(bL), b_plus);
  data.edges.push_back(directed(at_x(aM), at_y(aM), a_plus));
  data.edges.push_back(directed(at_y(aR), ra, a_plus));
  data.edges.push_back(directed(at_x(bM), at_y(bM), b_plus));
  data.edges.push_back(directed(at_y(bR), rb, b_plus));
  const long long label = next_label(data);
  for (int i = 0; i < 4; ++i) data.labels.push_back(label + i);
  return renumbered(LinkDiagram(std::move(data)));
}

struct Triangle {
  std::array<int, 3> edges;
  std::array<std::pair<Position, Position>, 3> slots;  // triangle-facing slots of each edge
};

std::optional<Triangle> triangle_at(const LinkDiagram& d, int face) {
  const auto& corners = face_corners(d, face);
  if (corners.size() != 3) return std::nullopt;
  if (corners[0].crossing == corners[1].crossing || corners[1].crossing == corners[2].crossing ||
      corners[0].crossing == corners[2].crossing)
    return std::nullopt;
  Triangle t{};
  bool top = false, bottom = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Corner& c = corners[i];
    const Corner& next = corners[(i + 1) % 3];
    const Position u = make_position(c.crossing, c.quadrant + 1);
    const Position v = make_position(next.crossing, next.quadrant);
    t.edges[i] = d.universe().edge_at(u);
    t.slots[i] = {u, v};
    top |= slot_of(u) % 2 == 1 && slot_of(v) % 2 == 1;
    bottom |= slot_of(u) % 2 == 0 && slot_of(v) % 2 == 0;
  }
  if (t.edges[0] == t.edges[1] || t.edges[1] == t.edges[2] || t.edges[0] == t.edges[2]) return std::nullopt;
  if (!top || !bottom) return std::nullopt;
  return t;
}

/*
  R3: each triangle strand keeps its crossings but meets them in the
  opposite order. The outside edge that reached a triangle crossing at the
  slot facing away from the triangle now lands on the strand's
  triangle-facing slot at the other crossing; the new triangle edges join
  the formerly outward slots, running the other way.
*/
LinkDiagram slide_triangle(const LinkDiagram& d, const MoveSite& site) {
  const auto tri = triangle_at(d, site.face);
  if (!tri) invalid("face " + std::to_string(site.face) + " is not an R3 triangle");
  std::vector<Position> phi(static_cast<std::size_t>(4 * d.crossing_count()));
  for (std::size_t p = 0; p < phi.size(); ++p) phi[p] = static_cast<Position>(p);
  for (const auto& [u, v] : tri->slots) {
    phi[static_cast<std::size_t>(straight_through(u))] = v;
    phi[static_cast<std::size_t>(straight_through(v))] = u;
  }
  DiagramData data = d.data();
  for (int e = 0; e < d.edge_count(); ++e) {
    auto& edge = data.edges[static_cast<std::size_t>(e)];
    if (std::find(tri->edges.begin(), tri->edges.end(), e) != tri->edges.end())
      edge = {straight_through(d.head(e)), straight_through(d.tail(e))};
    else
      edge = {phi[static_cast<std::size_t>(d.tail(e))], phi[static_cast<std::size_t>(d.head(e))]};
  }
  return renumbered(LinkDiagram(std::move(data)));
}

constexpr std::array<int, 4> kStraight = {2, 3, 0, 1};

bool is_curl_face(const LinkDiagram& d, int face) { return face_corners(d, face).size() == 1; }

bool is_bigon_site(const LinkDiagram& d, int face) {
  const auto& corners = face_corners(d, face);
  if (corners.size() != 2 || corners[0].crossing == corners[1].crossing) return false;
  return corners[0].quadrant % 2 != corners[1].quadrant % 2;
}

LinkDiagram remove_curl(const LinkDiagram& d, const MoveSite& site) {
  if (!is_curl_face(d, site.face)) invalid("face " + std::to_string(site.face) + " is not a curl");
  const int c = face_corners(d, site.face).front().crossing;
  return renumbered(splice(d, {{c, kStraight}}));
}

LinkDiagram remove_bigon(const LinkDiagram& d, const MoveSite& site) {
  if (!is_bigon_site(d, site.face)) invalid("face " + std::to_string(site.face) + " is not an R2 bigon");
  const auto& corners = face_corners(d, site.face);
  return renumbered(splice(d, {{corners[0].crossing, kStraight}, {corners[1].crossing, kStraight}}));
}

}  // namespace

std::vector<MoveSite> available_sites(const LinkDiagram& d, Move move) {
  std::vector<MoveSite> sites;
  const int faces_total = d.crossing_count() == 0 ? 0 : d.universe().face_count();
  switch (move) {
    case Move::R1Positive:
    case Move::R1Negative:
      for (int e = (d.free_loops() > 0 ? -1 : 0); e < d.edge_count(); ++e)
        for (bool over_first : {false, true}) {
          MoveSite s;
          s.edge = e;
          s.over_first = over_first;
          sites.push_back(s);
        }
      break;
    case Move::R2: {
      const auto inc = faces(d);
      for (int f = 0; f < faces_total; ++f) {
        const int size = static_cast<int>(inc[static_cast<std::size_t>(f)].size());
        for (int i = 0; i < size; ++i)
          for (int j = i + 1; j < size; ++j) {
            if (inc[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)].edge ==
                inc[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)].edge)
              continue;
            for (bool a_over : {true, false}) {
              MoveSite s;
              s.face = f;
              s.side_a = i;
              s.side_b = j;
              s.a_over = a_over;
              sites.push_back(s);
            }
          }
      }
      break;
    }
    case Move::R3:
    case Move::R1Remove:
    case Move::R2Remove:
      for (int f = 0; f < faces_total; ++f) {
        const bool ok = move == Move::R3 ? triangle_at(d, f).has_value()
                        : move == Move::R1Remove ? is_curl_face(d, f)
                                                 : is_bigon_site(d, f);
        if (!ok) continue;
        MoveSite s;
        s.face = f;
        sites.push_back(s);
      }
      break;
  }
  return sites;
}

LinkDiagram apply_reidemeister(const LinkDiagram& d, Move move, const MoveSite& site) {
  switch (move) {
    case Move::R1Positive: return insert_curl(d, 1, site);
    case Move::R1Negative: return insert_curl(d, -1, site);
    case Move::R2: return insert_bigon(d, site);
    case Move::R3: return slide_triangle(d, site);
    case Move::R1Remove: return remove_curl(d, site);
    case Move::R2Remove: return remove_bigon(d, site);
  }
  invalid("unknown move");
}

LinkDiagram random_reidemeister(const LinkDiagram& d, std::mt19937_64& rng, const std::vector<Move>& moves) {
  std::vector<std::pair<Move, MoveSite>> options;
  for (Move m : moves)
    for (const auto& s : available_sites(d, m)) options.emplace_back(m, s);
  if (options.empty()) return d;
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  const auto& [m, s] = options[pick(rng)];
  return apply_reidemeister(d, m, s);
}

}  // namespace knot
