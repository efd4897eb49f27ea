#include "knot/diagram.hpp"

#include "knot/error.hpp"
#include "knot/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace knot {

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) { throw KnotError(kind, detail); }

}  // namespace

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(int crossings, std::vector<std::pair<Position, Position>> edge_ends, int free_loops,
                   std::optional<std::pair<int, bool>> outer)
    : crossings_(crossings), free_loops_(free_loops), ends_(std::move(edge_ends)) {
  const std::size_t slots = static_cast<std::size_t>(crossings) * 4;
  partner_.assign(slots, -1);
  edge_of_.assign(slots, -1);
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    const auto [a, b] = ends_[e];
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= slots || static_cast<std::size_t>(b) >= slots || a == b)
      fail(ErrorKind::DanglingEdge, "edge endpoint outside the crossing slots");
    if (edge_of_[static_cast<std::size_t>(a)] >= 0 || edge_of_[static_cast<std::size_t>(b)] >= 0)
      fail(ErrorKind::DanglingEdge, "crossing slot used twice");
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
    edge_of_[static_cast<std::size_t>(a)] = edge_of_[static_cast<std::size_t>(b)] = static_cast<int>(e);
  }
  for (std::size_t p = 0; p < slots; ++p)
    if (partner_[p] < 0) fail(ErrorKind::DanglingEdge, "crossing slot without an edge");

  corner_face_.assign(slots, -1);
  for (std::size_t start = 0; start < slots; ++start) {
    if (corner_face_[start] >= 0) continue;
    const int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    Position cur = static_cast<Position>(start);
    do {
      corner_face_[static_cast<std::size_t>(cur)] = f;
      faces_.back().push_back({crossing_of(cur), slot_of(cur)});
      cur = partner_[static_cast<std::size_t>(make_position(crossing_of(cur), slot_of(cur) + 1))];
    } while (cur != static_cast<Position>(start));
  }

  UnionFind pieces(static_cast<std::size_t>(crossings));
  for (const auto& [a, b] : ends_) pieces.unite(crossing_of(a), crossing_of(b));
  piece_of_.assign(static_cast<std::size_t>(crossings), -1);
  std::map<int, int> piece_index;
  for (int c = 0; c < crossings; ++c) {
    auto [it, inserted] = piece_index.try_emplace(pieces.find(c), static_cast<int>(piece_index.size()));
    piece_of_[static_cast<std::size_t>(c)] = it->second;
  }
  pieces_ = static_cast<int>(piece_index.size()) + free_loops;

  if (crossings == 0) {
    faces_.assign(static_cast<std::size_t>(free_loops) + 1, {});
    for (int i = 1; i <= free_loops; ++i) adjacent_.emplace_back(i - 1, i);
    outer_face_ = 0;
    return;
  }

  std::set<std::pair<int, int>> adjacent;
  for (int e = 0; e < edge_count(); ++e) {
    const auto [f, g] = edge_sides(e);
    if (f != g) adjacent.emplace(std::min(f, g), std::max(f, g));
  }
  adjacent_.assign(adjacent.begin(), adjacent.end());

  if (outer) {
    const auto [f, g] = edge_sides(outer->first);
    outer_face_ = outer->second ? f : g;
  } else {
    outer_face_ = 0;
    for (int f = 1; f < face_count(); ++f)
      if (faces_[static_cast<std::size_t>(f)].size() > faces_[static_cast<std::size_t>(outer_face_)].size())
        outer_face_ = f;
  }
}

std::pair<int, int> Universe::edge_sides(int e) const {
  const Position a = ends_[static_cast<std::size_t>(e)].first;
  return {face_of(crossing_of(a), slot_of(a) + 3), face_of(crossing_of(a), slot_of(a))};
}

int Universe::component_count() const {
  std::vector<bool> seen(ends_.size(), false);
  int count = free_loops_;
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    if (seen[e]) continue;
    ++count;
    // Walk one way: leave through end1, re-enter straight through.
    int cur = static_cast<int>(e);
    Position out = ends_[e].second;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      const Position next = straight_through(out);
      cur = edge_of_[static_cast<std::size_t>(next)];
      out = partner_[static_cast<std::size_t>(next)];
    }
  }
  return count;
}

bool Universe::faces_adjacent(int f, int g) const {
  return std::binary_search(adjacent_.begin(), adjacent_.end(), std::make_pair(std::min(f, g), std::max(f, g)));
}

// ---------------------------------------------------------------------------
// LinkDiagram

LinkDiagram::LinkDiagram() : LinkDiagram([] {
  DiagramData d;
  d.free_loops = 1;
  return d;
}()) {}

LinkDiagram::LinkDiagram(DiagramData data) : data_(std::move(data)) {
  const int n = data_.crossings;
  if (n < 0 || data_.free_loops < 0) fail(ErrorKind::SyntaxError, "negative counts");
  if (static_cast<int>(data_.edges.size()) != 2 * n)
    fail(ErrorKind::DanglingEdge, "a diagram with " + std::to_string(n) + " crossings needs " +
                                      std::to_string(2 * n) + " edges");
  if (data_.labels.empty()) {
    data_.labels.resize(data_.edges.size());
    std::iota(data_.labels.begin(), data_.labels.end(), 1);
  }
  if (data_.labels.size() != data_.edges.size()) fail(ErrorKind::SyntaxError, "label count mismatch");

  std::vector<std::pair<Position, Position>> ends;
  ends.reserve(data_.edges.size());
  for (const auto& e : data_.edges) ends.emplace_back(e.tail, e.head);
  universe_ = Universe(n, std::move(ends), data_.free_loops, data_.outer);

  std::vector<int> is_head(static_cast<std::size_t>(4 * n), 0);
  for (const auto& e : data_.edges) is_head[static_cast<std::size_t>(e.head)] = 1;
  for (int c = 0; c < n; ++c) {
    const auto at = [&](int k) { return is_head[static_cast<std::size_t>(4 * c + k)]; };
    if (!at(0) || at(2) || at(1) == at(3))
      fail(ErrorKind::OrientationError, "crossing " + std::to_string(c) + " does not run strands straight through");
  }

  // Euler characteristic per piece.
  const int piece_total = universe_.piece_count() - data_.free_loops;
  std::vector<int> vertices(static_cast<std::size_t>(piece_total), 0), faces_in(static_cast<std::size_t>(piece_total), 0);
  for (int c = 0; c < n; ++c) ++vertices[static_cast<std::size_t>(universe_.piece_of(c))];
  for (const auto& face : universe_.faces())
    if (!face.empty()) ++faces_in[static_cast<std::size_t>(universe_.piece_of(face.front().crossing))];
  for (int p = 0; p < piece_total; ++p) {
    const int v = vertices[static_cast<std::size_t>(p)];
    if (v - 2 * v + faces_in[static_cast<std::size_t>(p)] != 2)
      fail(ErrorKind::NonPlanarError, "V - E + F = " + std::to_string(faces_in[static_cast<std::size_t>(p)] - v) +
                                          " for a piece with " + std::to_string(v) + " crossings");
  }

  component_of_.assign(data_.edges.size(), -1);
  for (std::size_t e = 0; e < data_.edges.size(); ++e) {
    if (component_of_[e] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    int cur = static_cast<int>(e);
    while (component_of_[static_cast<std::size_t>(cur)] < 0) {
      component_of_[static_cast<std::size_t>(cur)] = id;
      components_.back().push_back(cur);
      cur = universe_.edge_at(straight_through(head(cur)));
    }
  }
}

long long LinkDiagram::label(int e) const { return data_.labels[static_cast<std::size_t>(e)]; }

int LinkDiagram::sign(int crossing) const { return incoming(crossing, 1) ? 1 : -1; }

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

int LinkDiagram::negative_crossings() const {
  int count = 0;
  for (int c = 0; c < crossing_count(); ++c) count += sign(c) < 0;
  return count;
}

bool LinkDiagram::alternating() const {
  for (const auto& e : data_.edges)
    if (slot_of(e.tail) % 2 == slot_of(e.head) % 2) return false;
  return true;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  for (int c = 0; c < crossing_count(); ++c) {
    os << (first ? "" : " ") << "X[";
    first = false;
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label(edge_at(c, k));
    os << ']';
  }
  for (int i = 0; i < data_.free_loops; ++i) {
    os << (first ? "" : " ") << "unknot";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text format

std::vector<PdToken> tokenize_pd(std::string_view text) {
  std::string clean;
  clean.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) clean += ch;
  }

  std::vector<PdToken> tokens;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < clean.size() && (std::isspace(static_cast<unsigned char>(clean[i])) || clean[i] == ',')) ++i;
  };
  const auto read_int = [&]() -> long long {
    while (i < clean.size() && std::isspace(static_cast<unsigned char>(clean[i]))) ++i;
    const std::size_t start = i;
    if (i < clean.size() && (clean[i] == '-' || clean[i] == '+')) ++i;
    const std::size_t digits = i;
    while (i < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i]))) ++i;
    if (digits == i) fail(ErrorKind::SyntaxError, "expected an integer at offset " + std::to_string(start));
    if (i - digits > 15) fail(ErrorKind::SyntaxError, "integer too long at offset " + std::to_string(start));
    return std::stoll(clean.substr(start, i - start));
  };
  const auto read_list = [&](PdToken& tok) {
    ++i;  // '['
    tok.has_list = true;
    for (;;) {
      while (i < clean.size() && std::isspace(static_cast<unsigned char>(clean[i]))) ++i;
      if (i >= clean.size()) fail(ErrorKind::SyntaxError, "unterminated '[' in " + tok.name);
      if (clean[i] == ']') {
        ++i;
        return;
      }
      if (!tok.list.empty()) {
        if (clean[i] != ',') fail(ErrorKind::SyntaxError, "expected ',' in " + tok.name + "[...]");
        ++i;
      }
      tok.list.push_back(read_int());
    }
  };

  for (skip_space(); i < clean.size(); skip_space()) {
    if (!std::isalpha(static_cast<unsigned char>(clean[i])) && clean[i] != '_')
      fail(ErrorKind::SyntaxError, std::string("unexpected character '") + clean[i] + "' at offset " + std::to_string(i));
    PdToken tok;
    while (i < clean.size() && (std::isalnum(static_cast<unsigned char>(clean[i])) || clean[i] == '_')) tok.name += clean[i++];
    if (i < clean.size() && clean[i] == '[') {
      read_list(tok);
    } else if (i < clean.size() && clean[i] == '=') {
      ++i;
      if (i < clean.size() && clean[i] == '[')
        read_list(tok);
      else
        tok.value = read_int();
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

namespace {

/*
  Orientation from crossing tuples over dense edge ids.

  Each straight-through cycle is oriented by its under-passages (an edge
  entering a slot 0 or leaving a slot 2 fixes the direction). Cycles with
  no under-passage fall back to consecutive label order; a tie (two-edge
  cycles) puts the lowest-labelled edge's tail at the lower position.

  In strict mode conflicting under-passages raise OrientationError; in
  lenient mode the majority wins and offending crossings are rotated by two.
*/
DiagramData orient(std::vector<std::array<int, 4>> tuples, const std::vector<long long>& labels,
                   const std::vector<int>& starts, bool strict) {
  const int n = static_cast<int>(tuples.size());
  const std::size_t edge_total = labels.size();
  std::vector<std::vector<Position>> occ(edge_total);
  std::vector<int> pos_edge(static_cast<std::size_t>(4 * n));
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      const int e = tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      occ[static_cast<std::size_t>(e)].push_back(make_position(c, k));
      pos_edge[static_cast<std::size_t>(make_position(c, k))] = e;
    }
  for (std::size_t e = 0; e < edge_total; ++e)
    if (occ[e].size() != 2)
      fail(ErrorKind::DanglingEdge, "edge " + std::to_string(labels[e]) + " appears " + std::to_string(occ[e].size()) +
                                        " time(s)");

  struct Step {
    int edge;
    Position from, to;
  };
  std::vector<DirectedEdge> directed(edge_total);
  std::vector<bool> visited(edge_total, false);
  std::vector<int> start_cycle(starts.size(), -1);
  int cycle_index = 0;
  for (std::size_t first = 0; first < edge_total; ++first, ++cycle_index) {
    if (visited[first]) {
      --cycle_index;
      continue;
    }
    std::vector<Step> steps;
    int e = static_cast<int>(first);
    Position from = occ[first][0];
    Position to = occ[first][1];
    for (;;) {
      visited[static_cast<std::size_t>(e)] = true;
      steps.push_back({e, from, to});
      const Position next_from = straight_through(to);
      const int next = pos_edge[static_cast<std::size_t>(next_from)];
      if (next == static_cast<int>(first) && next_from == steps.front().from) break;
      if (visited[static_cast<std::size_t>(next)]) fail(ErrorKind::NonPlanarError, "strands do not close up");
      const auto& o = occ[static_cast<std::size_t>(next)];
      e = next;
      from = next_from;
      to = o[0] == next_from ? o[1] : o[0];
    }

    int plus = 0, minus = 0;
    for (const auto& s : steps) {
      if (slot_of(s.to) == 0 || slot_of(s.from) == 2) ++plus;
      if (slot_of(s.to) == 2 || slot_of(s.from) == 0) ++minus;
    }
    if (strict && plus > 0 && minus > 0)
      fail(ErrorKind::OrientationError, "under-passages disagree along the component through edge " +
                                            std::to_string(labels[first]));
    bool forward;
    if (plus != minus) {
      forward = plus > minus;
    } else if (plus > 0) {
      forward = true;
    } else {
      const std::size_t len = steps.size();
      const auto lab = [&](std::size_t i) { return labels[static_cast<std::size_t>(steps[i % len].edge)]; };
      std::optional<bool> from_start;
      for (std::size_t s = 0; s < starts.size(); ++s)
        for (std::size_t i = 0; i < len; ++i)
          if (steps[i].edge == starts[s]) {
            if (lab(i + 1) == lab(i) + 1) from_start = true;
            else if (lab(i + len - 1) == lab(i) + 1) from_start = false;
          }
      int ahead = 0, behind = 0;
      for (std::size_t i = 0; i < len; ++i) {
        ahead += lab(i + 1) == lab(i) + 1;
        behind += lab(i) == lab(i + 1) + 1;
      }
      if (from_start) {
        forward = *from_start;
      } else if (ahead != behind) {
        forward = ahead > behind;
      } else {
        std::size_t low = 0;
        for (std::size_t i = 1; i < len; ++i)
          if (lab(i) < lab(low)) low = i;
        forward = steps[low].from < steps[low].to;
      }
    }
    for (const auto& s : steps)
      directed[static_cast<std::size_t>(s.edge)] = forward ? DirectedEdge{s.from, s.to} : DirectedEdge{s.to, s.from};
    for (std::size_t s = 0; s < starts.size(); ++s)
      for (const auto& st : steps)
        if (st.edge == starts[s]) start_cycle[s] = cycle_index;
  }

  if (!starts.empty()) {
    std::vector<int> hits(static_cast<std::size_t>(cycle_index), 0);
    for (int c : start_cycle) ++hits[static_cast<std::size_t>(c)];
    for (int h : hits)
      if (h != 1)
        fail(ErrorKind::SyntaxError, "components=[...] must name exactly one edge of each component");
  }

  if (!strict) {
    std::vector<int> is_head(static_cast<std::size_t>(4 * n), 0);
    for (const auto& d : directed) is_head[static_cast<std::size_t>(d.head)] = 1;
    for (int c = 0; c < n; ++c) {
      if (is_head[static_cast<std::size_t>(4 * c)]) continue;
      for (auto& d : directed) {
        if (crossing_of(d.tail) == c) d.tail = make_position(c, slot_of(d.tail) + 2);
        if (crossing_of(d.head) == c) d.head = make_position(c, slot_of(d.head) + 2);
      }
    }
  }

  DiagramData out;
  out.crossings = n;
  out.edges = std::move(directed);
  out.labels = labels;
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<long long, 4>> raw;
  int free_loops = 0;
  std::vector<long long> starts;
  bool have_starts = false;
  std::optional<long long> outer;
  for (const auto& tok : tokenize_pd(text)) {
    if (tok.name == "X" && tok.has_list && !tok.value) {
      if (tok.list.size() != 4) fail(ErrorKind::SyntaxError, "X[...] needs four edge identifiers");
      std::array<long long, 4> t{};
      for (std::size_t k = 0; k < 4; ++k) {
        if (tok.list[k] <= 0) fail(ErrorKind::SyntaxError, "edge identifiers must be positive");
        t[k] = tok.list[k];
      }
      raw.push_back(t);
    } else if (tok.name == "unknot" && !tok.has_list && !tok.value) {
      ++free_loops;
    } else if (tok.name == "components" && tok.has_list) {
      starts = tok.list;
      have_starts = true;
    } else if (tok.name == "outer" && tok.value) {
      outer = tok.value;
    } else {
      fail(ErrorKind::SyntaxError, "unexpected token '" + tok.name + "'");
    }
  }
  if (raw.empty() && free_loops == 0) free_loops = 1;

  std::vector<long long> labels;
  for (const auto& t : raw) labels.insert(labels.end(), t.begin(), t.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const auto id_of = [&](long long label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<int>(it - labels.begin());
  };
  std::vector<std::array<int, 4>> tuples;
  for (const auto& t : raw) tuples.push_back({id_of(t[0]), id_of(t[1]), id_of(t[2]), id_of(t[3])});
  std::vector<int> start_ids;
  for (long long s : starts) {
    const int id = id_of(s);
    if (id < 0) fail(ErrorKind::SyntaxError, "components=[...] names unknown edge " + std::to_string(s));
    start_ids.push_back(id);
  }
  if (have_starts && raw.empty() && !starts.empty()) fail(ErrorKind::SyntaxError, "components=[...] without crossings");

  DiagramData data = orient(std::move(tuples), labels, start_ids, true);
  data.free_loops = free_loops;
  if (outer) {
    const int id = id_of(*outer < 0 ? -*outer : *outer);
    if (id < 0) fail(ErrorKind::SyntaxError, "outer= names unknown edge " + std::to_string(*outer));
    data.outer = std::make_pair(id, *outer > 0);
  }
  return LinkDiagram(std::move(data));
}

LinkDiagram assemble(const PlanarAssembly& assembly) {
  std::map<int, int> index;
  const auto idx = [&](int id) { return index.try_emplace(id, static_cast<int>(index.size())).first->second; };
  for (const auto& t : assembly.crossings)
    for (int id : t) idx(id);
  for (const auto& [a, b] : assembly.joins) {
    idx(a);
    idx(b);
  }
  UnionFind uf(index.size());
  for (const auto& [a, b] : assembly.joins) uf.unite(idx(a), idx(b));

  std::map<int, int> dense;
  std::vector<std::array<int, 4>> tuples;
  for (const auto& t : assembly.crossings) {
    std::array<int, 4> row{};
    for (std::size_t k = 0; k < 4; ++k)
      row[k] = dense.try_emplace(uf.find(idx(t[k])), static_cast<int>(dense.size())).first->second;
    tuples.push_back(row);
  }
  std::set<int> loop_classes;
  for (const auto& [id, i] : index)
    if (!dense.count(uf.find(i))) loop_classes.insert(uf.find(i));

  std::vector<long long> labels(dense.size());
  std::iota(labels.begin(), labels.end(), 1);
  DiagramData data = orient(std::move(tuples), labels, {}, false);
  data.free_loops = assembly.free_loops + static_cast<int>(loop_classes.size());
  return renumbered(LinkDiagram(std::move(data)));
}

// ---------------------------------------------------------------------------
// Faces, shading, checkerboard graph

std::vector<std::vector<FaceIncidence>> faces(const LinkDiagram& d) {
  std::vector<std::vector<FaceIncidence>> out;
  for (const auto& face : d.universe().faces()) {
    std::vector<FaceIncidence> row;
    for (const auto& corner : face) {
      const Position p = make_position(corner.crossing, corner.quadrant + 1);
      const int e = d.universe().edge_at(p);
      row.push_back({e, d.tail(e) == p});
    }
    out.push_back(std::move(row));
  }
  return out;
}

int component_count(const Universe& u) { return u.component_count(); }

int writhe(const LinkDiagram& d) { return d.writhe(); }

int Shading::shaded_count() const { return static_cast<int>(std::count(shaded.begin(), shaded.end(), true)); }

Shading checkerboard(const Universe& u) {
  const int f = u.face_count();
  std::vector<int> color(static_cast<std::size_t>(f), -1);
  if (u.crossing_count() == 0) {
    for (int i = 0; i < f; ++i) color[static_cast<std::size_t>(i)] = i % 2;
  } else {
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(f));
    for (int e = 0; e < u.edge_count(); ++e) {
      const auto [a, b] = u.edge_sides(e);
      nbr[static_cast<std::size_t>(a)].push_back(b);
      nbr[static_cast<std::size_t>(b)].push_back(a);
    }
    const auto paint = [&](int root) {
      std::queue<int> q;
      color[static_cast<std::size_t>(root)] = 0;
      q.push(root);
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : nbr[static_cast<std::size_t>(x)]) {
          if (color[static_cast<std::size_t>(y)] < 0) {
            color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
            q.push(y);
          } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
            throw std::logic_error("face graph is not bipartite");
          }
        }
      }
    };
    paint(u.outer_face());
    for (int i = 0; i < f; ++i)
      if (color[static_cast<std::size_t>(i)] < 0) paint(i);
  }
  Shading s;
  for (int c : color) s.shaded.push_back(c == 1);
  return s;
}

CheckerboardGraph checkerboard_graph(const Universe& u, const Shading& s) {
  CheckerboardGraph g;
  std::vector<int> node(s.shaded.size(), -1);
  for (std::size_t f = 0; f < s.shaded.size(); ++f)
    if (s.shaded[f]) {
      node[f] = g.node_count();
      g.node_face.push_back(static_cast<int>(f));
    }
  for (int c = 0; c < u.crossing_count(); ++c) {
    const int k = s.shaded[static_cast<std::size_t>(u.face_of(c, 0))] ? 0 : 1;
    g.edges.emplace_back(node[static_cast<std::size_t>(u.face_of(c, k))],
                         node[static_cast<std::size_t>(u.face_of(c, k + 2))]);
  }
  return g;
}

Integer spanning_tree_count(const CheckerboardGraph& g) {
  const int n = g.node_count();
  if (n == 0) return 0;
  Matrix<Integer> lap(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    ++lap[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
    ++lap[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
    --lap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    --lap[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  lap.pop_back();
  for (auto& row : lap) row.pop_back();
  return determinant_integer(std::move(lap));
}

Integer spanning_tree_count_brute(const CheckerboardGraph& g) {
  const int n = g.node_count();
  if (n == 0) return 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges)
    if (e.first != e.second) edges.push_back(e);
  if (edges.size() > 24) throw std::invalid_argument("too many edges for brute-force tree count");
  Integer count = 0;
  const unsigned long limit = 1ul << edges.size();
  for (unsigned long mask = 0; mask < limit; ++mask) {
    if (__builtin_popcountl(mask) != n - 1) continue;
    UnionFind uf(static_cast<std::size_t>(n));
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i)
      if (mask >> i & 1ul) acyclic = uf.unite(edges[i].first, edges[i].second);
    if (acyclic) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Relabeling and comparison

LinkDiagram renumbered(const LinkDiagram& d) {
  std::vector<std::pair<Position, int>> starts;
  for (const auto& comp : d.components()) {
    int best = comp.front();
    for (int e : comp)
      if (d.tail(e) < d.tail(best)) best = e;
    starts.emplace_back(d.tail(best), d.component_of_edge(best));
  }
  std::sort(starts.begin(), starts.end());
  DiagramData data = d.data();
  long long next = 1;
  for (const auto& [tail, comp_id] : starts) {
    const auto& comp = d.components()[static_cast<std::size_t>(comp_id)];
    const auto at = std::find_if(comp.begin(), comp.end(), [&](int e) { return d.tail(e) == tail; });
    const std::size_t offset = static_cast<std::size_t>(at - comp.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      data.labels[static_cast<std::size_t>(comp[(offset + i) % comp.size()])] = next++;
  }
  return LinkDiagram(std::move(data));
}

std::string canonical_code(const LinkDiagram& d) {
  const Universe& u = d.universe();
  const int n = d.crossing_count();
  std::map<int, std::vector<int>> best;  // piece -> smallest code
  for (int s = 0; s < n; ++s) {
    std::vector<int> fresh(static_cast<std::size_t>(n), -1);
    std::vector<int> code;
    std::queue<int> q;
    fresh[static_cast<std::size_t>(s)] = 0;
    int assigned = 1;
    q.push(s);
    while (!q.empty()) {
      const int c = q.front();
      q.pop();
      for (int k = 0; k < 4; ++k) {
        const Position other = u.partner(make_position(c, k));
        int& id = fresh[static_cast<std::size_t>(crossing_of(other))];
        if (id < 0) {
          id = assigned++;
          q.push(crossing_of(other));
        }
        code.push_back(id * 4 + slot_of(other));
        code.push_back(d.incoming(c, k) ? 1 : 0);
      }
    }
    auto& slot = best[u.piece_of(s)];
    if (slot.empty() || code < slot) slot = std::move(code);
  }
  std::vector<std::vector<int>> pieces;
  for (auto& [piece, code] : best) pieces.push_back(std::move(code));
  std::sort(pieces.begin(), pieces.end());
  std::ostringstream os;
  for (const auto& code : pieces) {
    os << '(';
    for (std::size_t i = 0; i < code.size(); ++i) os << (i ? "," : "") << code[i];
    os << ')';
  }
  os << "+" << d.free_loops();
  return os.str();
}

bool isomorphic(const LinkDiagram& a, const LinkDiagram& b) {
  return a.crossing_count() == b.crossing_count() && a.free_loops() == b.free_loops() &&
         canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Derived diagrams

namespace {

/// Renames slots at crossing c by new_slot = map[old_slot].
void remap_slots(DiagramData& data, int c, const std::array<int, 4>& map) {
  for (auto& e : data.edges) {
    if (crossing_of(e.tail) == c) e.tail = make_position(c, map[static_cast<std::size_t>(slot_of(e.tail))]);
    if (crossing_of(e.head) == c) e.head = make_position(c, map[static_cast<std::size_t>(slot_of(e.head))]);
  }
}

}  // namespace

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) fail(ErrorKind::InvalidSite, "no crossing " + std::to_string(crossing));
  DiagramData data = d.data();
  const int over_in = d.sign(crossing) > 0 ? 1 : 3;
  std::array<int, 4> map{};
  for (int k = 0; k < 4; ++k) map[static_cast<std::size_t>(k)] = ((k - over_in) % 4 + 4) % 4;
  remap_slots(data, crossing, map);
  return LinkDiagram(std::move(data));
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (int c = 0; c < d.crossing_count(); ++c) out = switch_crossing(out, c);
  return out;
}

LinkDiagram reversed(const LinkDiagram& d) {
  DiagramData data = d.data();
  for (auto& e : data.edges) std::swap(e.tail, e.head);
  for (int c = 0; c < data.crossings; ++c) remap_slots(data, c, {2, 3, 0, 1});
  if (data.outer) data.outer->second = !data.outer->second;
  return LinkDiagram(std::move(data));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  DiagramData data = a.data();
  const int shift = 4 * a.crossing_count();
  long long top = 0;
  for (long long l : data.labels) top = std::max(top, l);
  for (int e = 0; e < b.edge_count(); ++e) {
    data.edges.push_back({b.tail(e) + shift, b.head(e) + shift});
    data.labels.push_back(top + b.label(e));
  }
  data.crossings += b.crossing_count();
  data.free_loops += b.free_loops();
  return LinkDiagram(std::move(data));
}

LinkDiagram with_free_loops(const LinkDiagram& d, int extra) {
  DiagramData data = d.data();
  data.free_loops += extra;
  return LinkDiagram(std::move(data));
}

LinkDiagram splice(const LinkDiagram& d, const std::vector<std::pair<int, std::array<int, 4>>>& routes) {
  const int n = d.crossing_count();
  std::vector<const std::array<int, 4>*> route(static_cast<std::size_t>(n), nullptr);
  for (const auto& [c, r] : routes) {
    if (c < 0 || c >= n) fail(ErrorKind::InvalidSite, "no crossing " + std::to_string(c));
    route[static_cast<std::size_t>(c)] = &r;
  }
  std::vector<int> fresh(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (int c = 0; c < n; ++c)
    if (!route[static_cast<std::size_t>(c)]) fresh[static_cast<std::size_t>(c)] = kept++;
  const auto removed = [&](Position p) { return route[static_cast<std::size_t>(crossing_of(p))] != nullptr; };
  const auto moved = [&](Position p) { return make_position(fresh[static_cast<std::size_t>(crossing_of(p))], slot_of(p)); };
  const auto follow = [&](Position head_pos) {
    const int c = crossing_of(head_pos);
    const int out = (*route[static_cast<std::size_t>(c)])[static_cast<std::size_t>(slot_of(head_pos))];
    const int e = d.edge_at(c, out);
    if (d.tail(e) != make_position(c, out)) throw std::logic_error("splice route must lead out of the crossing");
    return e;
  };

  std::vector<bool> used(static_cast<std::size_t>(d.edge_count()), false);
  DiagramData data;
  data.crossings = kept;
  data.free_loops = d.free_loops();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (removed(d.tail(e))) continue;
    used[static_cast<std::size_t>(e)] = true;
    Position h = d.head(e);
    while (removed(h)) {
      const int next = follow(h);
      used[static_cast<std::size_t>(next)] = true;
      h = d.head(next);
    }
    data.edges.push_back({moved(d.tail(e)), moved(h)});
    data.labels.push_back(d.label(e));
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (used[static_cast<std::size_t>(e)]) continue;
    ++data.free_loops;
    int cur = e;
    while (!used[static_cast<std::size_t>(cur)]) {
      used[static_cast<std::size_t>(cur)] = true;
      cur = follow(d.head(cur));
    }
  }
  return LinkDiagram(std::move(data));
}

LinkDiagram smooth(const LinkDiagram& d, int crossing, Smoothing kind) {
  if (crossing < 0 || crossing >= d.crossing_count()) fail(ErrorKind::InvalidSite, "no crossing " + std::to_string(crossing));
  PlanarAssembly a;
  a.free_loops = d.free_loops();
  for (int c = 0; c < d.crossing_count(); ++c)
    if (c != crossing) a.crossings.push_back({d.edge_at(c, 0), d.edge_at(c, 1), d.edge_at(c, 2), d.edge_at(c, 3)});
  const auto at = [&](int k) { return d.edge_at(crossing, k); };
  if (kind == Smoothing::A) {
    a.joins = {{at(0), at(3)}, {at(1), at(2)}};
  } else {
    a.joins = {{at(0), at(1)}, {at(2), at(3)}};
  }
  return assemble(a);
}

LinkDiagram smooth_oriented(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) fail(ErrorKind::InvalidSite, "no crossing " + std::to_string(crossing));
  const std::array<int, 4> route = d.sign(crossing) > 0 ? std::array<int, 4>{3, 2, -1, -1} : std::array<int, 4>{1, -1, -1, 2};
  return splice(d, {{crossing, route}});
}

}  // namespace knot
