#include "twobridge/jones.hpp"

#include <cstdint>
#include <vector>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

constexpr std::int64_t kMaxExponentEntry = 1'000'000;

std::int64_t small(const Integer& x) {
  if (!x.fits_slong_p() || ::abs(x) > kMaxExponentEntry) {
    fail(Errc::kInvalidArgument, "entry " + x.get_str() + " is too large");
  }
  return x.get_si();
}

std::int64_t abs_small(const Integer& x) {
  std::int64_t v = small(x);
  return v < 0 ? -v : v;
}

}  // namespace

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::kRecursive:
      return "recursive";
    case Engine::kDirect:
      return "direct";
    case Engine::kFpoly:
      return "fpoly";
  }
  return "unknown";
}

JonesResult JonesResult::from_poly(HLPoly p, Engine engine) {
  if (p.is_zero()) fail(Errc::kZeroPolynomial, "zero polynomial has no leading term");
  LeadingTerm lead = leading_term(p);
  if (lead.coeff != 1 && lead.coeff != -1) {
    fail(Errc::kInvalidArgument, "leading coefficient " + lead.coeff.get_str() + " is not a unit");
  }
  JonesResult r;
  r.degree = lead.degree;
  r.leading_sign = sign_from_int(sign_of(lead.coeff));
  r.normalized = p.shifted(-lead.degree.halves());
  if (r.leading_sign == Sign::kMinus) r.normalized = -r.normalized;
  r.poly = std::move(p);
  r.engine = engine;
  return r;
}

SkeinConstants skein_constants() {
  SkeinConstants c;
  c.epsilon = HLPoly::t_halves(-3) - HLPoly::t_halves(-1);
  c.epsilon_bar = HLPoly::t_halves(3) - HLPoly::t_halves(1);
  c.unknot = HLPoly(1);
  c.two_unknots = -HLPoly::t_halves(-1) - HLPoly::t_halves(1);
  return c;
}

JonesResult jones_recursive(const EvenCF& cf) {
  std::vector<Sign> types = type_sequence(cf).types;
  HLPoly before = skein_constants().two_unknots;  // V_{[0]}
  HLPoly current = 1;                             // V_{[ ]}
  for (std::size_t k = 0; k < cf.size(); ++k) {
    std::int64_t b = abs_small(cf[k]);
    HLPoly next;
    if (types[k] == Sign::kMinus) {
      next = HLPoly::t_pow(-b) * before - HLPoly::t_halves(-1) * q_integer(b) * current;
    } else {
      next = HLPoly::t_pow(b) * before - HLPoly::t_halves(1) * q_integer(b, true) * current;
    }
    before = std::move(current);
    current = std::move(next);
  }
  return JonesResult::from_poly(std::move(current), Engine::kRecursive);
}

HLPoly specialized_f_positive(const PositiveCF& cf) {
  std::size_t n = cf.size();
  std::vector<HLPoly> entries;
  entries.reserve(n);
  std::int64_t ell = 0;  // l_{i-1}
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t a = small(cf[i]);
    std::int64_t prev = ell;
    ell += a;
    if (i == 0) {
      entries.push_back(q_integer(a + 1) - HLPoly::q_pow(1));
    } else if (i % 2 == 1) {  // a_2, a_4, ...
      entries.push_back(q_integer(a) * HLPoly::q_pow(-ell));
    } else {
      entries.push_back(q_integer(a) * HLPoly::q_pow(prev + 1));
    }
  }
  HLPoly f = numerator_rec(entries);
  if (n % 2 == 0) f = f * HLPoly::q_pow(ell);
  return f;
}

HLPoly specialized_f_even(const EvenCF& cf) {
  Rat value = cf.value();
  if (!(Rat(1) < value.abs())) fail(Errc::kOutOfRange, "value must satisfy |r| > 1");
  PositiveCF a = positive_cf(value.abs());
  HLPoly f = specialized_f_positive(a);
  if (cf[0] > 0) return f;
  std::int64_t d = small(a.tiles());
  return HLPoly::q_pow(d + 1) * bar(f);
}

HLPoly f_recursive(const EvenCF& cf) {
  if (cf[0] < 0) fail(Errc::kWrongOrientation, "the F recursion requires b_1 > 0");
  std::vector<Sign> types = type_sequence(cf).types;
  HLPoly before = 1;  // F of the empty fraction
  HLPoly current = q_integer(abs_small(cf[0]) + 1) - HLPoly::q_pow(1);
  for (std::size_t k = 1; k < cf.size(); ++k) {
    std::int64_t b = abs_small(cf[k]);
    std::int64_t b_prev = abs_small(cf[k - 1]);
    // The type before b_1 is taken as "-" (sign(b_0) = 1).
    Sign t2 = k >= 2 ? types[k - 2] : Sign::kMinus;
    Sign t1 = types[k - 1];
    Sign t0 = types[k];
    HLPoly nu = 1;
    HLPoly mu;
    if (t0 == Sign::kMinus) {
      if (t1 == Sign::kMinus) {
        mu = HLPoly::t_pow(-b + 1);
      } else if (t2 == Sign::kMinus) {
        mu = HLPoly::t_pow(-b - b_prev);
      } else {
        mu = -HLPoly::t_pow(-b - b_prev + 1);
      }
    } else {
      if (t1 == Sign::kMinus) {
        nu = -HLPoly::t_pow(-1);
        mu = 1;
      } else if (t2 == Sign::kMinus) {
        mu = -HLPoly::t_pow(-b_prev);
      } else {
        mu = HLPoly::t_pow(-b_prev + 1);
      }
    }
    HLPoly next = mu * before + nu * q_integer(b) * current;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

DegreeSign degree_and_sign(const EvenCF& cf) {
  std::int64_t halves = 0;
  int prev_sign = 1;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    std::int64_t b = small(cf[i]);
    int s = b < 0 ? -1 : 1;
    std::int64_t term = 2 * (i % 2 == 0 ? b : -b) + s * prev_sign;
    halves += term > -1 ? term : -1;
    prev_sign = s;
  }
  std::size_t m = cf.size();
  std::size_t t = tau(type_sequence(cf));
  return {HalfInt::from_halves(halves), (m - t) % 2 == 0 ? Sign::kPlus : Sign::kMinus};
}

JonesResult jones_via_f(const EvenCF& cf) {
  DegreeSign ds = degree_and_sign(cf);
  HLPoly p = specialized_f_even(cf).shifted(ds.degree.halves());
  if (ds.sign == Sign::kMinus) p = -p;
  return JonesResult::from_poly(std::move(p), Engine::kFpoly);
}

JonesResult jones_direct(const PositiveCF& cf) {
  HLPoly f = specialized_f_positive(cf);
  Rat value = cf.value();
  DegreeSign ds;  // the unknot: degree 0, sign +
  if (value != Rat(1)) ds = degree_and_sign(oriented_even_cf(value));
  HLPoly p = f.shifted(ds.degree.halves());
  if (ds.sign == Sign::kMinus) p = -p;
  return JonesResult::from_poly(std::move(p), Engine::kDirect);
}

std::array<Integer, 6> boundary_coefficients(const PositiveCF& cf) {
  std::size_t n = cf.size();
  if (cf[0] < 2 || cf[n - 1] < 2) {
    fail(Errc::kHypothesisViolated, "the coefficient formulas require a_1 >= 2 and a_n >= 2");
  }
  if (n == 1) {
    // [a + 1]_q - q = 1 + q^2 + ... + q^a; for a <= 3 the six positions overlap.
    Integer a = cf[0];
    auto at = [&](const Integer& j) { return Integer(j == 0 || (j >= 2 && j <= a) ? 1 : 0); };
    return {at(0), at(1), at(2), at(a - 2), at(a - 1), at(a)};
  }
  Integer alpha = 0;
  for (const Integer& a : cf.entries()) {
    if (a == 1) ++alpha;
  }
  Integer delta_first = cf[0] == 2 ? 1 : 0;
  Integer delta_last = cf[n - 1] == 2 ? 1 : 0;
  Integer k = static_cast<unsigned long>(n / 2);
  Integer v1, v2, v_back2, v_back1;
  if (n % 2 == 1) {
    v1 = k;
    v_back1 = k + 1;
    v2 = (k + 1) * (k + 2) / 2 - alpha;
    v_back2 = (k * k + 5 * k + 2) / 2 - alpha - delta_first - delta_last;
  } else {
    v1 = k;
    v_back1 = k;
    // [a_n]_q = 1 + q contributes no q^2 term when a_n = 2.
    v2 = k * (k + 3) / 2 - alpha - delta_last;
    v_back2 = k * (k + 3) / 2 - alpha - delta_first;
  }
  return {Integer(1), v1, v2, v_back2, v_back1, Integer(1)};
}

VolumeBounds volume_bounds(const PositiveCF& cf) {
  for (const Integer& a : cf.entries()) {
    if (a < 3) fail(Errc::kHypothesisViolated, "the volume bounds require every a_i >= 3");
  }
  double n = static_cast<double>(cf.size());
  return {kVolumeLowerSlope * (n - 2), 30 * kTetrahedronVolume * (n - 1)};
}

JonesResult mirror(const JonesResult& res) {
  return JonesResult::from_poly(bar(res.poly), res.engine);
}

}  // namespace twobridge
