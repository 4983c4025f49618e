#include "twobridge/snake.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

// Geometry is materialized tile by tile, so keep constructions bounded.
constexpr long kMaxSnakeTiles = 1'000'000;

long small_entry(const Integer& x) {
  if (!x.fits_slong_p() || ::abs(x) > kMaxSnakeTiles) {
    fail(Errc::kTooManyTiles, "entry " + x.get_str() + " is too large for a snake graph");
  }
  return x.get_si();
}

void append(std::vector<Sign>& out, long count, Sign s) {
  if (static_cast<long>(out.size()) + count > kMaxSnakeTiles) {
    fail(Errc::kTooManyTiles, "snake graph exceeds " + std::to_string(kMaxSnakeTiles) + " tiles");
  }
  out.insert(out.end(), static_cast<std::size_t>(std::max(count, 0L)), s);
}

Step other(Step s) { return s == Step::kRight ? Step::kUp : Step::kRight; }

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& e) const {
    std::size_t h = 0;
    for (std::uint64_t w : e) h = h * 0x9e3779b97f4a7c15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }
};

bool has(const EdgeSet& s, int e) { return (s[e / 64] >> (e % 64)) & 1; }
void toggle(EdgeSet& s, int e) { s[e / 64] ^= std::uint64_t{1} << (e % 64); }

}  // namespace

SnakeGraph SnakeGraph::from_signs(Sign first_sign, std::vector<Sign> edge_signs) {
  SnakeGraph g;
  g.d = static_cast<int>(edge_signs.size()) + 1;
  g.first_sign = first_sign;
  if (!edge_signs.empty()) {
    g.steps.push_back(Step::kRight);
    for (std::size_t i = 1; i < edge_signs.size(); ++i) {
      Step prev = g.steps.back();
      g.steps.push_back(edge_signs[i] == edge_signs[i - 1] ? other(prev) : prev);
    }
  }
  g.edge_signs = std::move(edge_signs);
  return g;
}

SnakeGraph SnakeGraph::from_step_word(int d, std::string_view word) {
  if (d < 0) fail(Errc::kInvalidArgument, "tile count must be nonnegative");
  if (static_cast<int>(word.size()) != std::max(d - 1, 0)) {
    fail(Errc::kInvalidArgument, "step word length must be d - 1");
  }
  SnakeGraph g;
  g.d = d;
  for (char c : word) {
    if (c != 'R' && c != 'U') fail(Errc::kParseError, "step word uses letters R and U");
    g.steps.push_back(static_cast<Step>(c));
  }
  if (!g.steps.empty()) {
    if (g.steps[0] != Step::kRight) fail(Errc::kInvalidArgument, "step word must start with R");
    g.edge_signs.push_back(Sign::kPlus);
    for (std::size_t i = 1; i < g.steps.size(); ++i) {
      Sign prev = g.edge_signs.back();
      g.edge_signs.push_back(g.steps[i] != g.steps[i - 1] ? prev : -prev);
    }
    g.first_sign = g.edge_signs[0];
  }
  return g;
}

std::string SnakeGraph::step_word() const {
  std::string out;
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

SnakeGraph snake_from_positive(const PositiveCF& cf) {
  std::size_t n = cf.size();
  if (n == 1 && cf[0] == 1) return SnakeGraph{};
  std::vector<Sign> signs;
  if (n == 1) {
    append(signs, small_entry(cf[0]) - 2, Sign::kPlus);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      long run = small_entry(cf[i]);
      if (i == 0 || i + 1 == n) run -= 1;
      append(signs, run, i % 2 == 0 ? Sign::kPlus : Sign::kMinus);
    }
  }
  return SnakeGraph::from_signs(Sign::kPlus, std::move(signs));
}

SnakeGraph snake_from_even(const EvenCF& cf) {
  std::vector<Sign> eps = type_sequence(cf).types;
  std::vector<Sign> signs;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    append(signs, small_entry(::abs(cf[i])) - 2, eps[i]);
    if (i + 1 == cf.size()) break;
    if (sign_of(cf[i]) == sign_of(cf[i + 1])) {
      append(signs, 1, eps[i]);
      append(signs, 1, eps[i + 1]);
    } else {
      append(signs, 1, -eps[i]);
    }
  }
  return SnakeGraph::from_signs(sign_from_int(sign_of(cf[0])), std::move(signs));
}

int tile_count_even(const EvenCF& cf) {
  long total = -1;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    total += small_entry(::abs(cf[i]));
    if (i > 0 && sign_of(cf[i]) != sign_of(cf[i - 1])) --total;
    if (total > kMaxSnakeTiles) fail(Errc::kTooManyTiles, "snake graph is too large");
  }
  return static_cast<int>(total);
}

bool isomorphic(const SnakeGraph& g, const SnakeGraph& h) {
  if (g.d != h.d) return false;
  if (g.d <= 1) return true;
  std::vector<Step> a = g.steps;
  std::vector<Step> swapped;
  for (Step s : h.steps) swapped.push_back(other(s));
  auto matches = [&](std::vector<Step> w) {
    if (w == a) return true;
    std::reverse(w.begin(), w.end());
    return w == a;
  };
  return matches(h.steps) || matches(swapped);
}

Integer count_matchings(const SnakeGraph& g) {
  if (g.d == 0) return 1;
  // all: matchings of tiles 1..i; shared: those containing the edge that
  // tile i shares with tile i+1.
  Integer all = 2;
  Integer shared = 1;
  for (int i = 1; i < g.d; ++i) {
    Integer next_all = all + shared;
    if (i + 1 < g.d) {
      bool straight = g.steps[i - 1] == g.steps[i];
      shared = straight ? all : shared;
    }
    all = std::move(next_all);
  }
  return all;
}

SnakeLayout layout(const SnakeGraph& g) {
  SnakeLayout out;
  if (g.d == 0) {
    out.edges.push_back({{0, 0}, {1, 0}});
    return out;
  }
  std::map<std::pair<Point, Point>, int> ids;
  auto edge_id = [&](Point a, Point b) {
    auto [it, inserted] = ids.try_emplace({a, b}, static_cast<int>(out.edges.size()));
    if (inserted) out.edges.push_back({a, b});
    return it->second;
  };
  Point corner{0, 0};
  for (int i = 0; i < g.d; ++i) {
    if (i > 0) {
      if (g.steps[i - 1] == Step::kRight) {
        ++corner.x;
      } else {
        ++corner.y;
      }
    }
    Point sw = corner;
    Point se{corner.x + 1, corner.y};
    Point nw{corner.x, corner.y + 1};
    Point ne{corner.x + 1, corner.y + 1};
    SnakeLayout::Tile t;
    t.corner = corner;
    t.south = edge_id(sw, se);
    t.west = edge_id(sw, nw);
    t.north = edge_id(nw, ne);
    t.east = edge_id(se, ne);
    out.tiles.push_back(t);
  }
  bool south = g.d == 1 || g.first_sign == g.edge_signs[0];
  out.distinguished_edge = south ? out.tiles[0].south : out.tiles[0].west;
  return out;
}

namespace {

// Boundary matching of the layout containing the distinguished edge.
EdgeSet minimal_matching(const SnakeLayout& lay) {
  int n = static_cast<int>(lay.edges.size());
  std::vector<int> tiles_using(n, 0);
  for (const auto& t : lay.tiles) {
    for (int e : {t.south, t.west, t.north, t.east}) ++tiles_using[e];
  }
  std::map<Point, std::vector<int>> incident;
  for (int e = 0; e < n; ++e) {
    if (tiles_using[e] != 1) continue;
    incident[lay.edges[e].from].push_back(e);
    incident[lay.edges[e].to].push_back(e);
  }
  // Walk the boundary cycle, keeping every other edge.
  EdgeSet m{};
  int e = lay.distinguished_edge;
  Point at = lay.edges[e].to;
  bool take = true;
  do {
    if (take) toggle(m, e);
    take = !take;
    const auto& pair = incident.at(at);
    int next = pair[0] == e ? pair[1] : pair[0];
    const Edge& ne = lay.edges[next];
    at = ne.from == at ? ne.to : ne.from;
    e = next;
  } while (e != lay.distinguished_edge);
  return m;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const SnakeGraph& g, std::size_t budget) {
  if (g.d > kMaxTiles) {
    fail(Errc::kTooManyTiles, "enumeration supports at most " + std::to_string(kMaxTiles) + " tiles");
  }
  Integer total = count_matchings(g);
  if (total > Integer(static_cast<unsigned long>(budget))) {
    fail(Errc::kBudgetExceeded,
         total.get_str() + " matchings exceed the budget of " + std::to_string(budget));
  }
  SnakeLayout lay = layout(g);
  auto to_matching = [&](const EdgeSet& s, TileSet height) {
    Matching m;
    m.height = height;
    for (int e = 0; e < static_cast<int>(lay.edges.size()); ++e) {
      if (has(s, e)) m.edges.push_back(e);
    }
    return m;
  };
  if (g.d == 0) return {to_matching(EdgeSet{1, 0, 0, 0}, 0)};

  std::vector<Matching> out;
  std::unordered_set<EdgeSet, EdgeSetHash> seen;
  std::deque<std::pair<EdgeSet, TileSet>> queue;
  EdgeSet start = minimal_matching(lay);
  seen.insert(start);
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [m, height] = queue.front();
    queue.pop_front();
    out.push_back(to_matching(m, height));
    for (int i = 0; i < g.d; ++i) {
      const auto& t = lay.tiles[i];
      bool horizontal = has(m, t.south) && has(m, t.north);
      bool vertical = has(m, t.west) && has(m, t.east);
      if (!horizontal && !vertical) continue;
      EdgeSet next = m;
      for (int e : {t.south, t.north, t.west, t.east}) toggle(next, e);
      if (seen.insert(next).second) queue.emplace_back(next, height ^ (TileSet{1} << i));
    }
  }
  return out;
}

YPoly f_polynomial(const SnakeGraph& g, std::size_t budget) {
  YPoly f;
  for (const Matching& m : enumerate_matchings(g, budget)) f += YPoly::monomial(m.height);
  return f;
}

std::string render_ascii(const SnakeGraph& g) {
  SnakeLayout lay = layout(g);
  if (g.d == 0) return "+---+\n";
  int width = 0;
  int height = 0;
  for (const auto& t : lay.tiles) {
    width = std::max(width, t.corner.x + 1);
    height = std::max(height, t.corner.y + 1);
  }
  int cols = 4 * width + 1;
  int rows = 2 * height + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  auto at = [&](int x, int y) -> char& { return canvas[rows - 1 - y][x]; };
  for (std::size_t i = 0; i < lay.tiles.size(); ++i) {
    int x = 4 * lay.tiles[i].corner.x;
    int y = 2 * lay.tiles[i].corner.y;
    for (int k = 1; k < 4; ++k) {
      at(x + k, y) = '-';
      at(x + k, y + 2) = '-';
    }
    at(x, y + 1) = '|';
    at(x + 4, y + 1) = '|';
    for (int dx : {0, 4}) {
      for (int dy : {0, 2}) at(x + dx, y + dy) = '+';
    }
    std::string label = std::to_string(i + 1);
    if (label.size() <= 3) {
      int start = x + 1 + (label.size() == 1 ? 1 : 0);
      for (std::size_t k = 0; k < label.size(); ++k) at(start + static_cast<int>(k), y + 1) = label[k];
    }
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

}  // namespace twobridge
