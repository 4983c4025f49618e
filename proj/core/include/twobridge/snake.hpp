#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/cfrac.hpp"
#include "twobridge/integer.hpp"
#include "twobridge/sign.hpp"
#include "twobridge/ypoly.hpp"

namespace twobridge {

enum class Step : char { kRight = 'R', kUp = 'U' };

// A snake graph in its canonical embedding: tile 1 has its lower-left corner
// at the origin and each further tile sits east (RIGHT) or north (UP) of the
// previous one. d = 0 is the single-edge graph.
struct SnakeGraph {
  int d = 0;
  // steps[i]: direction from tile i+1 to tile i+2 (length max(d-1, 0)).
  std::vector<Step> steps;
  // edge_signs[i]: sign of the interior edge e_{i+1} between tiles i+1, i+2.
  std::vector<Sign> edge_signs;
  Sign first_sign = Sign::kPlus;

  // Builds the graph from interior signs; steps follow the turn rule.
  static SnakeGraph from_signs(Sign first_sign, std::vector<Sign> edge_signs);
  // Inverse of step_word(); the distinguished edge becomes the south edge.
  static SnakeGraph from_step_word(int d, std::string_view word);

  std::string step_word() const;

  friend bool operator==(const SnakeGraph&, const SnakeGraph&) = default;
};

SnakeGraph snake_from_positive(const PositiveCF& cf);
SnakeGraph snake_from_even(const EvenCF& cf);

// sum |b_i| - 1 - (number of sign changes).
int tile_count_even(const EvenCF& cf);

bool isomorphic(const SnakeGraph& g, const SnakeGraph& h);

Integer count_matchings(const SnakeGraph& g);

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Edge {
  Point from;
  Point to;
};

// Explicit geometry: tile corners and a numbering of the 3d + 1 edges.
struct SnakeLayout {
  struct Tile {
    Point corner;  // lower-left
    int south, west, north, east;  // edge ids
  };
  std::vector<Tile> tiles;
  std::vector<Edge> edges;
  // Edge of the first tile carrying first_sign.
  int distinguished_edge = 0;
};

SnakeLayout layout(const SnakeGraph& g);

// Edge ids fit in four 64-bit words: 3 * kMaxTiles + 1 <= 256.
using EdgeSet = std::array<std::uint64_t, 4>;

struct Matching {
  std::vector<int> edges;  // sorted edge ids of the layout
  TileSet height = 0;      // bit j-1 set when tile j was flipped
};

inline constexpr std::size_t kDefaultMatchingBudget = 1'000'000;

// All perfect matchings, in breadth-first order from the minimal one.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g,
                                          std::size_t budget = kDefaultMatchingBudget);

YPoly f_polynomial(const SnakeGraph& g, std::size_t budget = kDefaultMatchingBudget);

std::string render_ascii(const SnakeGraph& g);

}  // namespace twobridge
