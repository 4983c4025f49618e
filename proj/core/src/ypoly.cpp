#include "twobridge/ypoly.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

void check_tile_count(int d) {
  if (d < 0 || d > kMaxTiles) {
    fail(Errc::kTooManyTiles, "tile count " + std::to_string(d) + " exceeds the limit of " +
                                  std::to_string(kMaxTiles));
  }
}

}  // namespace

TileSet full_tile_set(int d) {
  check_tile_count(d);
  return d == 64 ? ~TileSet{0} : (TileSet{1} << d) - 1;
}

YPoly::YPoly(int c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

YPoly YPoly::variable(int index) {
  if (index < 1) fail(Errc::kInvalidArgument, "tile variables are indexed from 1");
  check_tile_count(index);
  return monomial(TileSet{1} << (index - 1));
}

YPoly YPoly::monomial(TileSet tiles, const Integer& coeff) {
  YPoly p;
  p.add_term(tiles, coeff);
  return p;
}

YPoly YPoly::full_product(int d) { return monomial(full_tile_set(d)); }

Integer YPoly::coeff(TileSet tiles) const {
  auto it = terms_.find(tiles);
  return it == terms_.end() ? Integer(0) : it->second;
}

void YPoly::add_term(TileSet tiles, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(tiles, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

YPoly& YPoly::operator+=(const YPoly& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  YPoly out;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      if (sa & sb) {
        fail(Errc::kInvalidArgument, "product of y-monomials sharing a variable is not multilinear");
      }
      out.add_term(sa | sb, ca * cb);
    }
  }
  return out;
}

YPoly YPoly::complemented(int d) const {
  TileSet all = full_tile_set(d);
  YPoly out;
  for (const auto& [s, c] : terms_) {
    if (s & ~all) fail(Errc::kInvalidArgument, "monomial uses a variable beyond y_d");
    out.add_term(all & ~s, c);
  }
  return out;
}

std::string YPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order: by degree, then by the sorted index list.
  std::vector<std::pair<TileSet, Integer>> ordered(terms_.begin(), terms_.end());
  auto indices = [](TileSet s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1) {
      if (s & 1) out.push_back(i + 1);
    }
    return out;
  };
  std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    int px = std::popcount(x.first);
    int py = std::popcount(y.first);
    if (px != py) return px < py;
    return indices(x.first) < indices(y.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [s, c] : ordered) {
    Integer mag = ::abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::vector<int> idx = indices(s);
    if (idx.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += '*';
      out += "y" + std::to_string(idx[k]);
    }
  }
  return out;
}

HLPoly specialize_y(const YPoly& f, int d) {
  TileSet all = full_tile_set(d);
  HLPoly out;
  for (const auto& [s, c] : f.terms()) {
    if (s & ~all) fail(Errc::kInvalidArgument, "monomial uses a variable beyond y_d");
    int others = std::popcount(s & ~TileSet{1});
    std::int64_t halves = -2 * others;
    if (s & 1) halves -= 4;
    Integer coeff = others % 2 == 0 ? c : Integer(-c);
    out += HLPoly::monomial(coeff, HalfInt::from_halves(halves));
  }
  return out;
}

}  // namespace twobridge
