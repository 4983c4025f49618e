#pragma once

#include <array>
#include <string_view>

#include "twobridge/cfrac.hpp"
#include "twobridge/integer.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/sign.hpp"

namespace twobridge {

enum class Engine { kRecursive, kDirect, kFpoly };

std::string_view engine_name(Engine e);

struct JonesResult {
  HLPoly poly;
  HalfInt degree;
  Sign leading_sign = Sign::kPlus;
  // poly / (leading_sign * t^degree): top term 1 at exponent 0.
  HLPoly normalized;
  Engine engine = Engine::kRecursive;

  // Fails with ZeroPolynomial on p = 0.
  static JonesResult from_poly(HLPoly p, Engine engine);
};

struct SkeinConstants {
  HLPoly epsilon;      // t^{-3/2} - t^{-1/2}
  HLPoly epsilon_bar;  // t^{3/2} - t^{1/2}
  HLPoly unknot;       // 1
  HLPoly two_unknots;  // -t^{-1/2} - t^{1/2}
};

SkeinConstants skein_constants();

JonesResult jones_recursive(const EvenCF& cf);

// Specialized F-polynomial of a positive continued fraction, as the
// numerator of a continued fraction of Laurent polynomials in q = -t^{-1}.
HLPoly specialized_f_positive(const PositiveCF& cf);

HLPoly specialized_f_even(const EvenCF& cf);

// Recursion along the type sequence; requires b_1 > 0.
HLPoly f_recursive(const EvenCF& cf);

struct DegreeSign {
  HalfInt degree;
  Sign sign = Sign::kPlus;
};

DegreeSign degree_and_sign(const EvenCF& cf);

JonesResult jones_via_f(const EvenCF& cf);

// Direct formula from a positive continued fraction. The normalized
// polynomial is the specialized F-polynomial; degree and sign come from
// the even expansion carrying the same orientation.
JonesResult jones_direct(const PositiveCF& cf);

// (v_0, v_1, v_2, v_{l-2}, v_{l-1}, v_l): absolute values of the outer
// coefficients of the normalized Jones polynomial, l = a_1 + ... + a_n.
std::array<Integer, 6> boundary_coefficients(const PositiveCF& cf);

struct VolumeBounds {
  double lower = 0;
  double upper = 0;
};

inline constexpr double kVolumeLowerSlope = 0.35367;
inline constexpr double kTetrahedronVolume = 1.0149;

// Requires every a_i >= 3.
VolumeBounds volume_bounds(const PositiveCF& cf);

JonesResult mirror(const JonesResult& res);

}  // namespace twobridge
