#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "twobridge/integer.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge {

// Tile indices 1..kMaxTiles fit a 64-bit subset mask (bit i-1 for y_i).
inline constexpr int kMaxTiles = 63;

using TileSet = std::uint64_t;

// Multilinear polynomial in y_1, ..., y_d: every variable appears with
// exponent 0 or 1, so a monomial is a subset of tile indices.
class YPoly {
 public:
  using TermMap = std::map<TileSet, Integer>;

  YPoly() = default;
  YPoly(int c);  // NOLINT

  static YPoly variable(int index);
  static YPoly monomial(TileSet tiles, const Integer& coeff = 1);
  // y_1 y_2 ... y_d
  static YPoly full_product(int d);

  const TermMap& terms() const { return terms_; }
  Integer coeff(TileSet tiles) const;

  YPoly& operator+=(const YPoly& other);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  // Fails with InvalidArgument when two monomials share a variable, since
  // the product would leave the multilinear space.
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend bool operator==(const YPoly&, const YPoly&) = default;

  // Replaces every monomial y_S by y_{{1..d} \ S}, i.e. (y_1...y_d) * bar(F)
  // where bar inverts each variable.
  YPoly complemented(int d) const;

  // "1 + y1 + y1*y2"
  std::string to_string() const;

 private:
  void add_term(TileSet tiles, const Integer& c);

  TermMap terms_;
};

TileSet full_tile_set(int d);

// y_1 -> t^{-2}, y_j -> -t^{-1} for j >= 2.
HLPoly specialize_y(const YPoly& f, int d);

}  // namespace twobridge
