#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "twobridge/error.hpp"
#include "twobridge/integer.hpp"

namespace twobridge {

// A number in (1/2)Z, stored as its double.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_halves(std::int64_t halves) { return HalfInt(halves); }
  static constexpr HalfInt from_int(std::int64_t n) { return HalfInt(2 * n); }

  constexpr std::int64_t halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.halves_ + b.halves_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.halves_ - b.halves_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.halves_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  // "3", "-1", "5/2", "-1/2".
  std::string to_string() const;
  static HalfInt parse(std::string_view text);

 private:
  constexpr explicit HalfInt(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

// Laurent polynomial in t^{1/2} with integer coefficients. Terms are keyed
// by the exponent counted in t^{1/2} units; zero coefficients are never
// stored, so the zero polynomial is the empty map.
class HLPoly {
 public:
  using TermMap = std::map<std::int64_t, Integer>;

  HLPoly() = default;
  HLPoly(int c);  // NOLINT: constants convert implicitly
  HLPoly(const Integer& c);  // NOLINT

  static HLPoly monomial(const Integer& coeff, HalfInt exponent);
  // t^{halves/2}
  static HLPoly t_halves(std::int64_t halves);
  // t^{k}
  static HLPoly t_pow(std::int64_t k) { return t_halves(2 * k); }
  // q = -t^{-1} raised to an arbitrary integer power.
  static HLPoly q_pow(std::int64_t k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(HalfInt exponent) const;

  HLPoly& operator+=(const HLPoly& other);
  HLPoly& operator-=(const HLPoly& other);
  friend HLPoly operator+(HLPoly a, const HLPoly& b) { return a += b; }
  friend HLPoly operator-(HLPoly a, const HLPoly& b) { return a -= b; }
  friend HLPoly operator-(const HLPoly& a);
  friend HLPoly operator*(const HLPoly& a, const HLPoly& b);
  friend bool operator==(const HLPoly&, const HLPoly&) = default;

  // Multiplies by t^{halves/2}.
  HLPoly shifted(std::int64_t halves) const;

  // Exact division; fails unless the divisor divides this polynomial.
  HLPoly divided_by(const HLPoly& divisor) const;

  std::string to_string() const;
  std::string to_latex() const;
  static HLPoly parse(std::string_view text);

 private:
  void add_term(std::int64_t halves, const Integer& c);

  TermMap terms_;
};

struct LeadingTerm {
  HalfInt degree;
  Integer coeff;
};

// The involution t^{1/2} -> t^{-1/2}.
HLPoly bar(const HLPoly& p);

// [b]_q = 1 + q + ... + q^{b-1} at q = -t^{-1}; the barred variant uses -t.
HLPoly q_integer(std::int64_t b, bool barred = false);

LeadingTerm leading_term(const HLPoly& p);
LeadingTerm trailing_term(const HLPoly& p);
HalfInt width(const HLPoly& p);
bool is_alternating(const HLPoly& p);
// True when every exponent is an integer (knot grid); false when every
// exponent lies in 1/2 + Z. Fails with MixedGrid otherwise.
bool on_integer_grid(const HLPoly& p);

}  // namespace twobridge
