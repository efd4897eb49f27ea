#pragma once

#include "knot/diagram.hpp"

#include <random>
#include <vector>

namespace knot {

enum class Move {
  R1Positive,  // add a positive curl
  R1Negative,  // add a negative curl
  R2,          // push one strand across another, adding a bigon
  R3,          // slide a strand across a crossing of a triangle face
  R1Remove,    // undo a curl
  R2Remove,    // undo a bigon
};

/// Where a move applies. Fields not used by a move are ignored.
struct MoveSite {
  int edge = -1;            // R1 insertion: edge to kink, -1 for a free loop
  bool over_first = false;  // R1 insertion: the strand meets the new crossing over-first
  int face = -1;            // R2 insertion, R3, removals
  int side_a = -1;          // R2 insertion: two incidence indices into faces(d)[face]
  int side_b = -1;
  bool a_over = true;       // R2 insertion: strand a passes over
};

/// Every site at which the move can be applied, in a deterministic order.
std::vector<MoveSite> available_sites(const LinkDiagram& d, Move move);

/// The moved diagram with edges renumbered canonically. Throws InvalidSite
/// when the site does not admit the move.
LinkDiagram apply_reidemeister(const LinkDiagram& d, Move move, const MoveSite& site);

/// One uniformly chosen (move, site) among the moves listed.
LinkDiagram random_reidemeister(const LinkDiagram& d, std::mt19937_64& rng, const std::vector<Move>& moves);

}  // namespace knot
