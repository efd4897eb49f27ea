#pragma once

#include "knot/diagram.hpp"
#include "knot/reidemeister.hpp"
#include "knot/tangle.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace knot::testing {

struct Sample {
  std::string name;
  LinkDiagram diagram;
};

inline const std::vector<std::pair<std::string, std::string>>& base_pds() {
  static const std::vector<std::pair<std::string, std::string>> pds = {
      {"trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"},
      {"figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"},
      {"hopf", "X[1,3,2,4] X[3,1,4,2]"},
      {"5_1", "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"},
      {"5_2", "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"},
      {"6_1", "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]"},
      {"6_2", "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]"},
      {"6_3", "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]"},
      {"7_1", "X[1,8,2,9] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] X[9,2,10,3] X[11,4,12,5] X[13,6,14,7]"},
      {"whitehead", "X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]"},
      {"solomon", "X[6,1,7,2] X[8,3,5,4] X[2,5,3,6] X[4,7,1,8]"},
      {"figure-eight-curl", "X[1,4,2,5] X[5,8,6,9] X[3,7,4,6] X[7,3,8,2] X[9,12,10,1] X[11,10,12,11]"},
  };
  return pds;
}

/// Connected diagrams with at most 8 crossings: the base list, its mirrors,
/// and seeded Reidemeister variants.
inline const std::vector<Sample>& corpus() {
  static const std::vector<Sample> samples = [] {
    std::vector<Sample> out;
    for (const auto& [name, pd] : base_pds()) out.push_back({name, parse_pd(pd)});
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back({out[i].name + "-mirror", mirror(out[i].diagram)});
    std::mt19937_64 rng(7);
    const std::vector<Move> grow = {Move::R1Positive, Move::R1Negative, Move::R2, Move::R3};
    for (std::size_t i = 0; i < base; ++i) {
      LinkDiagram d = out[i].diagram;
      for (int step = 0; step < 4 && d.crossing_count() < 7; ++step) d = random_reidemeister(d, rng, grow);
      if (d.crossing_count() <= 8) out.push_back({out[i].name + "-moved", d});
    }
    return out;
  }();
  return samples;
}

/// A tangle built from [0], [oo] and single twists by sums, products and
/// quarter turns, with at most `max_crossings` crossings.
inline TangleDiagram random_tangle(std::mt19937_64& rng, int max_crossings) {
  TangleDiagram t = rng() % 2 ? zero_tangle() : twist_tangle(rng() % 2 ? 1 : -1);
  while (t.crossing_count() < max_crossings) {
    const TangleDiagram piece = rng() % 5 == 0 ? infinity_tangle() : twist_tangle(rng() % 2 ? 1 : -1);
    switch (rng() % 4) {
      case 0: t = tangle_sum(t, piece); break;
      case 1: t = tangle_product(t, piece); break;
      case 2: t = tangle_sum(piece, tangle_rotate(t)); break;
      default: t = tangle_product(piece, t); break;
    }
    if (rng() % 4 == 0) break;
  }
  return t;
}

inline const std::vector<TangleDiagram>& tangle_corpus() {
  static const std::vector<TangleDiagram> tangles = [] {
    std::vector<TangleDiagram> out = {zero_tangle(), infinity_tangle(), twist_tangle(1), twist_tangle(-1),
                                      parse_tangle("X[1,2,3,4] X[5,6,2,1] NW=4 NE=5 SW=3 SE=6")};
    std::mt19937_64 rng(3);
    while (out.size() < 30) out.push_back(random_tangle(rng, 6));
    return out;
  }();
  return tangles;
}

}  // namespace knot::testing
