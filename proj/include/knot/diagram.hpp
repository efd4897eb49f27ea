#pragma once

#include "knot/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knot {

/*
  Slot conventions.

  A crossing has four slots 0..3 taken in the order the PD tuple lists
  them. Slot 0 is the incoming under-strand, slot 2 the outgoing
  under-strand; the over-strand uses slots 1 and 3. The slots run around
  the crossing in a fixed rotational sense, and quadrant k is the corner
  between slots k and k+1 (mod 4).

  A position packs (crossing, slot) as crossing * 4 + slot.
*/
using Position = int;

constexpr int crossing_of(Position p) { return p / 4; }
constexpr int slot_of(Position p) { return p % 4; }
constexpr Position make_position(int crossing, int slot) { return crossing * 4 + ((slot % 4) + 4) % 4; }
/// The slot a strand leaves through after entering at p.
constexpr Position straight_through(Position p) { return make_position(crossing_of(p), slot_of(p) + 2); }

struct DirectedEdge {
  Position tail = 0;
  Position head = 0;
};

/// Oriented combinatorial data; what LinkDiagram validates and wraps.
struct DiagramData {
  int crossings = 0;
  std::vector<DirectedEdge> edges;
  int free_loops = 0;
  std::vector<long long> labels;  // external edge identifiers; empty means 1..E
  /// Edge whose left (true) or right (false) side is the unbounded face.
  std::optional<std::pair<int, bool>> outer;
};

struct Corner {
  int crossing = 0;
  int quadrant = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// The 4-regular plane graph under a diagram: over/under and orientation erased.
class Universe {
 public:
  Universe() = default;
  /// end0/end1 are the two positions of each edge.
  Universe(int crossings, std::vector<std::pair<Position, Position>> edge_ends, int free_loops,
           std::optional<std::pair<int, bool>> outer);

  int crossing_count() const noexcept { return crossings_; }
  int edge_count() const noexcept { return static_cast<int>(ends_.size()); }
  int free_loops() const noexcept { return free_loops_; }

  Position partner(Position p) const { return partner_[static_cast<std::size_t>(p)]; }
  int edge_at(Position p) const { return edge_of_[static_cast<std::size_t>(p)]; }
  std::pair<Position, Position> edge_ends(int e) const { return ends_[static_cast<std::size_t>(e)]; }

  /// Faces as corner cycles. A diagram without crossings has free_loops + 1
  /// cornerless faces. Split diagrams list faces piece by piece.
  const std::vector<std::vector<Corner>>& faces() const noexcept { return faces_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int face_of(int crossing, int quadrant) const {
    return corner_face_[static_cast<std::size_t>(make_position(crossing, quadrant))];
  }
  /// Faces on the two sides of edge e: (face left of end0 -> end1, face right of it).
  std::pair<int, int> edge_sides(int e) const;

  /// Connected pieces, counting each free loop as a piece.
  int piece_count() const noexcept { return pieces_; }
  bool connected() const noexcept { return pieces_ <= 1; }
  /// Piece index of each crossing.
  int piece_of(int crossing) const { return piece_of_[static_cast<std::size_t>(crossing)]; }

  /// Straight-through closed walks, plus free loops.
  int component_count() const;

  /// Unordered pairs (f < g) of distinct faces sharing an edge, sorted.
  const std::vector<std::pair<int, int>>& adjacent_face_pairs() const noexcept { return adjacent_; }
  bool faces_adjacent(int f, int g) const;

  int outer_face() const noexcept { return outer_face_; }

 private:
  int crossings_ = 0;
  int free_loops_ = 0;
  std::vector<std::pair<Position, Position>> ends_;
  std::vector<Position> partner_;
  std::vector<int> edge_of_;
  std::vector<std::vector<Corner>> faces_;
  std::vector<int> corner_face_;
  std::vector<int> piece_of_;
  int pieces_ = 0;
  std::vector<std::pair<int, int>> adjacent_;
  int outer_face_ = 0;
};

/// One side of one edge on a face boundary; left is relative to the edge's orientation.
struct FaceIncidence {
  int edge = 0;
  bool left = true;
  friend bool operator==(const FaceIncidence&, const FaceIncidence&) = default;
};

class LinkDiagram {
 public:
  /// The one-component unknot without crossings.
  LinkDiagram();
  /// Validates the data: every slot used once, slot 0 incoming, slot 2
  /// outgoing, strands straight through, V - E + F = 2 per piece.
  explicit LinkDiagram(DiagramData data);

  const DiagramData& data() const noexcept { return data_; }
  const Universe& universe() const noexcept { return universe_; }

  int crossing_count() const noexcept { return data_.crossings; }
  int edge_count() const noexcept { return static_cast<int>(data_.edges.size()); }
  int free_loops() const noexcept { return data_.free_loops; }

  Position tail(int e) const { return data_.edges[static_cast<std::size_t>(e)].tail; }
  Position head(int e) const { return data_.edges[static_cast<std::size_t>(e)].head; }
  int edge_at(int crossing, int slot) const { return universe_.edge_at(make_position(crossing, slot)); }
  bool incoming(int crossing, int slot) const { return head(edge_at(crossing, slot)) == make_position(crossing, slot); }
  long long label(int e) const;

  /// +1 when the over-strand enters at slot 1, -1 when it enters at slot 3.
  int sign(int crossing) const;
  int writhe() const;
  int negative_crossings() const;

  int left_face(int e) const { return universe_.face_of(crossing_of(tail(e)), slot_of(tail(e)) - 1 + 4); }
  int right_face(int e) const { return universe_.face_of(crossing_of(tail(e)), slot_of(tail(e))); }

  /// Oriented edge cycles, one per component with crossings.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  int component_count() const { return static_cast<int>(components_.size()) + data_.free_loops; }
  int component_of_edge(int e) const { return component_of_[static_cast<std::size_t>(e)]; }

  bool connected() const noexcept { return universe_.connected(); }
  /// Every edge runs from an under-slot to an over-slot.
  bool alternating() const;

  /// PD text with the current labels; free loops print as `unknot`.
  std::string to_pd() const;

 private:
  DiagramData data_;
  Universe universe_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
};

/// One token of the diagram/tangle text format.
struct PdToken {
  std::string name;
  std::vector<long long> list;  // bracketed integers, X[...], HOLE[...], components=[...]
  std::optional<long long> value;  // name=value
  bool has_list = false;
};

std::vector<PdToken> tokenize_pd(std::string_view text);

LinkDiagram parse_pd(std::string_view text);

/// Builds a diagram from unoriented crossing tuples (edge ids in slot
/// order, under-strand at slots 0/2) plus identifications between ids.
/// Orientation is chosen per component; crossings whose under-strand
/// runs backwards are rotated by two slots.
struct PlanarAssembly {
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::pair<int, int>> joins;
  int free_loops = 0;
};

LinkDiagram assemble(const PlanarAssembly& assembly);

std::vector<std::vector<FaceIncidence>> faces(const LinkDiagram& d);
int component_count(const Universe& u);
int writhe(const LinkDiagram& d);

/// shaded[f] for every face; the unbounded face is unshaded.
struct Shading {
  std::vector<bool> shaded;
  int shaded_count() const;
};

Shading checkerboard(const Universe& u);

/// Nodes are shaded faces; one edge per crossing (self-loops allowed).
struct CheckerboardGraph {
  std::vector<int> node_face;
  std::vector<std::pair<int, int>> edges;
  int node_count() const { return static_cast<int>(node_face.size()); }
};

CheckerboardGraph checkerboard_graph(const Universe& u, const Shading& s);

/// Matrix-tree theorem.
Integer spanning_tree_count(const CheckerboardGraph& g);
/// Enumerates edge subsets; for cross-checks on small graphs.
Integer spanning_tree_count_brute(const CheckerboardGraph& g);

/// Edge labels renumbered 1..E consecutively along each component; each
/// component starts at its edge with the lowest tail position.
LinkDiagram renumbered(const LinkDiagram& d);

/// Invariant of the oriented combinatorial map up to relabeling crossings
/// and edges.
std::string canonical_code(const LinkDiagram& d);
bool isomorphic(const LinkDiagram& a, const LinkDiagram& b);

/// Crossing change at one site (slots rotate by one).
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
/// All crossings switched.
LinkDiagram mirror(const LinkDiagram& d);
/// Every component reversed.
LinkDiagram reversed(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram with_free_loops(const LinkDiagram& d, int extra);

/// Removes crossings, routing each strand that enters a removed crossing at
/// slot k out through slot route[k]. `route` must pair incoming slots with
/// outgoing slots. Closed strands left without crossings become free loops.
LinkDiagram splice(const LinkDiagram& d, const std::vector<std::pair<int, std::array<int, 4>>>& routes);

enum class Smoothing { A, B };
/// Smoothing at one crossing: A joins slots (0,3) and (1,2), B joins (0,1)
/// and (2,3). Orientation of the result is chosen afresh.
LinkDiagram smooth(const LinkDiagram& d, int crossing, Smoothing kind);
/// The orientation-respecting smoothing, keeping every other edge's direction.
LinkDiagram smooth_oriented(const LinkDiagram& d, int crossing);

}  // namespace knot
