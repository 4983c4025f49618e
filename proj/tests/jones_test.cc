#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "twobridge/error.hpp"
#include "twobridge/jones.hpp"
#include "twobridge/snake.hpp"
#include "twobridge/sweep.hpp"

namespace twobridge {
namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

EvenCF E(std::initializer_list<long> b) { return EvenCF(ints(b)); }
PositiveCF A(std::initializer_list<long> a) { return PositiveCF(ints(a)); }
HLPoly P(std::string_view s) { return HLPoly::parse(s); }

// sum c_k q^k with q = -t^{-1}
HLPoly in_q(std::initializer_list<long> coeffs) {
  HLPoly out;
  std::int64_t k = 0;
  for (long c : coeffs) out += HLPoly(Integer(c)) * HLPoly::q_pow(k++);
  return out;
}

TEST(SkeinConstants, Values) {
  SkeinConstants c = skein_constants();
  EXPECT_EQ(c.epsilon, P("t^(-3/2) - t^(-1/2)"));
  EXPECT_EQ(c.epsilon_bar, P("t^(3/2) - t^(1/2)"));
  EXPECT_EQ(c.unknot, HLPoly(1));
  EXPECT_EQ(c.two_unknots, P("-t^(-1/2) - t^(1/2)"));
  EXPECT_EQ((HLPoly(1) - HLPoly::t_pow(-2)).divided_by(c.epsilon), c.two_unknots);
  EXPECT_EQ(c.epsilon_bar, HLPoly::t_pow(2) * -c.epsilon);
  EXPECT_EQ(bar(c.epsilon), c.epsilon_bar);
}

TEST(JonesRecursive, PaperValues) {
  EXPECT_EQ(jones_recursive(E({-2, 2})).poly, P("t^-1 + t^-3 - t^-4"));
  EXPECT_EQ(jones_recursive(E({2})).poly, P("-t^(5/2) - t^(1/2)"));
  EXPECT_EQ(jones_recursive(E({-2})).poly, P("-t^(-1/2) - t^(-5/2)"));
  EXPECT_EQ(jones_recursive(E({2, 2})).poly, P("t^2 - t + 1 - t^-1 + t^-2"));
  EXPECT_EQ(jones_recursive(E({4})).poly, P("-t^(9/2) - t^(5/2) + t^(3/2) - t^(1/2)"));
  EXPECT_EQ(jones_recursive(E({-4})).poly, bar(P("-t^(9/2) - t^(5/2) + t^(3/2) - t^(1/2)")));
  JonesResult v = jones_recursive(E({2, 2, -2, 4}));
  EXPECT_EQ(v.poly, P("t - 2 + 4t^-1 - 4t^-2 + 5t^-3 - 5t^-4 + 3t^-5 - 2t^-6 + t^-7"));
  EXPECT_EQ(v.degree, HalfInt::from_int(1));
  EXPECT_EQ(v.leading_sign, Sign::kPlus);
  EXPECT_EQ(v.engine, Engine::kRecursive);
}

TEST(JonesResult, NormalizationInvariant) {
  for_each_even_cf(10, 6, [](const EvenCF& cf) {
    JonesResult v = jones_recursive(cf);
    HLPoly rebuilt = v.normalized.shifted(v.degree.halves());
    if (v.leading_sign == Sign::kMinus) rebuilt = -rebuilt;
    ASSERT_EQ(rebuilt, v.poly);
    ASSERT_EQ(leading_term(v.normalized).degree, HalfInt());
    ASSERT_EQ(leading_term(v.normalized).coeff, 1);
  });
  EXPECT_THROW(JonesResult::from_poly(HLPoly(), Engine::kDirect), Error);
}

TEST(SpecializedFPositive, PaperValues) {
  EXPECT_EQ(specialized_f_positive(A({2, 2})), in_q({1, 1, 1, 1, 1}));
  EXPECT_EQ(specialized_f_positive(A({3, 2, 4})), in_q({1, 1, 3, 4, 5, 5, 5, 4, 2, 1}));
  EXPECT_EQ(specialized_f_positive(A({2, 3, 4, 5, 6})),
            in_q({1, 2, 6, 12, 22, 36, 54, 73, 92, 106, 113, 111, 101, 83, 63, 44, 27, 15, 7, 3, 1}));
  EXPECT_EQ(specialized_f_positive(A({1})), HLPoly(1));
}

TEST(SpecializedFPositive, MatchesMatchingSum) {
  // The F-polynomial computed from perfect matchings of the snake graph,
  // with heights found by the enclosed-tile oracle, then specialized.
  for_each_positive_cf(10, 9, true, [](const PositiveCF& cf) {
    SnakeGraph g = snake_from_positive(cf);
    ASSERT_EQ(specialized_f_positive(cf), specialize_y(oracle::f_polynomial(g), g.d))
        << cf.to_string();
  });
}

TEST(SpecializedFEven, PaperValues) {
  EXPECT_EQ(specialized_f_even(E({2, -2})), P("1 - t^-1 - t^-3"));
  EXPECT_EQ(specialized_f_even(E({-2, 2})), P("-t^-3 + t^-2 + 1"));
  EXPECT_EQ(specialized_f_even(E({-2, 2})), specialized_f_positive(A({3})));
  EXPECT_EQ(specialized_f_even(E({4})), P("1 + t^-2 - t^-3 + t^-4"));
  EXPECT_EQ(specialized_f_even(E({-4})), P("t^-4 + t^-2 - t^-1 + 1"));
  EXPECT_EQ(specialized_f_even(E({-4})), specialized_f_positive(A({1, 3})));
  EXPECT_EQ(specialized_f_even(E({4, -2})), P("1 - t^-1 + t^-2 - 2t^-3 + t^-4 - t^-5"));
  EXPECT_EQ(specialized_f_even(E({4, -2})), specialized_f_positive(A({3, 2})));
  EXPECT_EQ(specialized_f_even(E({-4, 2})), P("-t^-5 + t^-4 - t^-3 + 2t^-2 - t^-1 + 1"));
  EXPECT_EQ(specialized_f_even(E({-4, 2})), specialized_f_positive(A({1, 2, 2})));
}

TEST(FRecursive, PaperValues) {
  EXPECT_EQ(f_recursive(E({2})), P("1 + t^-2"));
  EXPECT_EQ(f_recursive(E({4, -2})), P("1 - t^-1 + t^-2 - 2t^-3 + t^-4 - t^-5"));
  EXPECT_EQ(f_recursive(E({2, 2, -2, 4})), specialized_f_positive(A({2, 1, 2, 3})));
  try {
    f_recursive(E({-2, 2}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kWrongOrientation);
  }
}

TEST(FRecursive, AgreesWithOtherFEngines) {
  for_each_even_cf(14, 6, [](const EvenCF& cf) {
    if (cf[0] < 0) return;
    HLPoly f = specialized_f_even(cf);
    ASSERT_EQ(f_recursive(cf), f) << cf.to_string();
    SnakeGraph g = snake_from_even(cf);
    ASSERT_EQ(specialize_y(f_polynomial(g), g.d), f) << cf.to_string();
  });
}

TEST(DegreeAndSign, Examples) {
  DegreeSign a = degree_and_sign(E({2, 2, -2, 4}));
  EXPECT_EQ(a.degree, HalfInt::from_int(1));
  EXPECT_EQ(a.sign, Sign::kPlus);
  DegreeSign b = degree_and_sign(E({-2, 2}));
  EXPECT_EQ(b.degree, HalfInt::from_int(-1));
  EXPECT_EQ(b.sign, Sign::kPlus);
  DegreeSign c = degree_and_sign(E({2}));
  EXPECT_EQ(c.degree, HalfInt::from_halves(5));
  EXPECT_EQ(c.sign, Sign::kMinus);
}

TEST(JonesViaF, Examples) {
  EXPECT_EQ(jones_via_f(E({-2, 2})).poly, HLPoly::t_pow(-1) * P("1 + t^-2 - t^-3"));
  EXPECT_EQ(jones_via_f(E({2})).poly, -HLPoly::t_halves(5) * P("1 + t^-2"));
  EXPECT_EQ(jones_via_f(E({2, -2})).poly, P("t + t^3 - t^4"));
  EXPECT_EQ(jones_via_f(E({2})).engine, Engine::kFpoly);
}

TEST(JonesDirect, Examples) {
  EXPECT_EQ(jones_direct(A({2, 2})).poly, P("t^2 - t + 1 - t^-1 + t^-2"));
  EXPECT_EQ(jones_direct(A({4})).poly, P("-t^(1/2) + t^(3/2) - t^(5/2) - t^(9/2)"));
  EXPECT_EQ(jones_direct(A({2, 3, 4, 5, 6})).normalized,
            in_q({1, 2, 6, 12, 22, 36, 54, 73, 92, 106, 113, 111, 101, 83, 63, 44, 27, 15, 7, 3, 1}));
  EXPECT_EQ(jones_direct(A({3})).poly, P("t^-1 + t^-3 - t^-4"));
  EXPECT_EQ(jones_direct(A({1})).poly, HLPoly(1));
  EXPECT_EQ(jones_direct(A({2, 1, 2, 3})).poly, jones_recursive(E({2, 2, -2, 4})).poly);
}

TEST(JonesDirect, AgreesWithRecursionOnLinkEvenValues) {
  for_each_positive_cf(14, 9, true, [](const PositiveCF& cf) {
    Rat r = cf.value();
    if (!(Rat(1) < r)) return;
    JonesResult d = jones_direct(cf);
    ASSERT_EQ(d.normalized, specialized_f_positive(cf));
    if (is_even(r.num() * r.den())) {
      ASSERT_EQ(d.poly, jones_recursive(even_cf_for_link(r)).poly) << cf.to_string();
    } else {
      ASSERT_EQ(d.poly, jones_recursive(oriented_even_cf(r)).poly) << cf.to_string();
    }
  });
}

TEST(Engines, AgreeOnSweep) {
  for_each_even_cf(14, 6, [](const EvenCF& cf) {
    JonesResult v = jones_recursive(cf);
    ASSERT_EQ(jones_via_f(cf).poly, v.poly) << cf.to_string();
    DegreeSign ds = degree_and_sign(cf);
    ASSERT_EQ(ds.degree, v.degree) << cf.to_string();
    ASSERT_EQ(ds.sign, v.leading_sign) << cf.to_string();
  });
}

TEST(Jones, ClosedFormsOnSweep) {
  for_each_even_cf(14, 6, [](const EvenCF& cf) {
    JonesResult v = jones_recursive(cf);
    Rat r = cf.value();
    PositiveCF a = positive_cf(r.abs());
    ASSERT_EQ(width(v.poly), HalfInt::from_int(a.total().get_si()));
    ASSERT_TRUE(is_alternating(v.poly));
    ASSERT_EQ(Integer(::abs(leading_term(v.poly).coeff)), 1);
    ASSERT_EQ(Integer(::abs(trailing_term(v.poly).coeff)), 1);
    bool knot = is_odd(r.num());
    ASSERT_EQ(on_integer_grid(v.poly), knot);
    ASSERT_EQ(cf.size() % 2 == 0, knot);
    // Lowest normalized term is (-1)^{d+1} t^{-d-1}.
    LeadingTerm low = trailing_term(v.normalized);
    std::int64_t d = a.tiles().get_si();
    ASSERT_EQ(low.degree, HalfInt::from_int(-d - 1));
    ASSERT_EQ(low.coeff, (d + 1) % 2 == 0 ? 1 : -1);
    ASSERT_EQ(jones_recursive(cf.negated()).poly, bar(v.poly));
  });
}

// Degrees and leading signs of V for the prefixes of length m, m-1, m-2,
// using the unknot and two-unknot conventions for the empty prefixes.
struct Prefixes {
  HalfInt j0, j1, j2;
  Sign d0, d1, d2;
};

Prefixes prefix_data(const EvenCF& cf) {
  std::size_t m = cf.size();
  auto data = [&](std::size_t len, HalfInt& j, Sign& s) {
    if (len == 0) {
      j = HalfInt();
      s = Sign::kPlus;
      return;
    }
    JonesResult v = jones_recursive(EvenCF(std::vector<Integer>(cf.entries().begin(),
                                                                 cf.entries().begin() + len)));
    j = v.degree;
    s = v.leading_sign;
  };
  Prefixes p;
  data(m, p.j0, p.d0);
  data(m - 1, p.j1, p.d1);
  if (m >= 2) {
    data(m - 2, p.j2, p.d2);
  } else {
    p.j2 = HalfInt::from_halves(1);  // -t^{-1/2} - t^{1/2}
    p.d2 = Sign::kMinus;
  }
  return p;
}

TEST(Jones, DegreeBookkeepingTables) {
  for_each_even_cf(14, 6, [](const EvenCF& cf) {
    std::size_t m = cf.size();
    std::vector<Sign> types = type_sequence(cf).types;
    Sign t0 = types[m - 1];
    Sign t1 = m >= 2 ? types[m - 2] : Sign::kMinus;
    Sign t2 = m >= 3 ? types[m - 3] : Sign::kMinus;
    std::int64_t bm = Integer(::abs(cf[m - 1])).get_si();
    std::int64_t bm1 = m >= 2 ? Integer(::abs(cf[m - 2])).get_si() : 0;
    Prefixes p = prefix_data(cf);
    auto H = HalfInt::from_halves;
    const Sign plus = Sign::kPlus;
    const Sign minus = Sign::kMinus;

    // j_0 against j_1 and delta_0 against delta_1.
    if (t0 == minus) {
      ASSERT_EQ(p.j0, p.j1 + H(-1)) << cf.to_string();
      ASSERT_EQ(p.d0, -p.d1) << cf.to_string();
    } else if (t1 == minus) {
      ASSERT_EQ(p.j0, p.j1 + H(2 * bm + 1)) << cf.to_string();
      ASSERT_EQ(p.d0, -p.d1) << cf.to_string();
    } else {
      ASSERT_EQ(p.j0, p.j1 + H(2 * bm - 1)) << cf.to_string();
      ASSERT_EQ(p.d0, p.d1) << cf.to_string();
    }

    // j_0 against j_2 and delta_0 against delta_2.
    HalfInt shift;
    Sign rel = plus;
    if (t0 == minus && t1 == minus) {
      shift = H(-2);
    } else if (t0 == minus && t2 == minus) {
      shift = H(2 * bm1);
    } else if (t0 == minus) {
      shift = H(2 * bm1 - 2);
      rel = minus;
    } else if (t1 == minus) {
      shift = H(2 * bm);
    } else if (t2 == minus) {
      shift = H(2 * (bm + bm1));
      rel = minus;
    } else {
      shift = H(2 * (bm + bm1) - 2);
    }
    ASSERT_EQ(p.j0, p.j2 + shift) << cf.to_string();
    ASSERT_EQ(p.d0, rel == plus ? p.d2 : -p.d2) << cf.to_string();
  });
}

TEST(Jones, DegreeInequality) {
  for_each_even_cf(14, 6, [](const EvenCF& cf) {
    std::size_t m = cf.size();
    Sign t0 = type_sequence(cf).types[m - 1];
    std::int64_t bm = Integer(::abs(cf[m - 1])).get_si();
    Prefixes p = prefix_data(cf);
    HalfInt x, y;
    if (t0 == Sign::kMinus) {
      x = p.j2 - HalfInt::from_int(bm);
      y = p.j1 - HalfInt::from_halves(1);
    } else {
      x = p.j2 + HalfInt::from_int(bm);
      y = p.j1 - HalfInt::from_halves(1) + HalfInt::from_int(bm);
    }
    HalfInt bound = std::max(x, y);
    ASSERT_LE(p.j0, bound) << cf.to_string();
    if (x != y) ASSERT_EQ(p.j0, bound) << cf.to_string();
  });
}

TEST(Reflection, SpecializedIdentity) {
  for_each_positive_cf(12, 9, true, [](const PositiveCF& cf) {
    if (cf[0] < 2) return;
    std::vector<Integer> longer = {Integer(1), Integer(cf[0] - 1)};
    longer.insert(longer.end(), cf.entries().begin() + 1, cf.entries().end());
    std::int64_t d = cf.tiles().get_si();
    ASSERT_EQ(specialized_f_positive(cf),
              HLPoly::q_pow(d + 1) * bar(specialized_f_positive(PositiveCF(longer))));
  });
}

TEST(BoundaryCoefficients, Examples) {
  using V = std::array<Integer, 6>;
  EXPECT_EQ(boundary_coefficients(A({3, 2, 4})), (V{1, 1, 3, 4, 2, 1}));
  EXPECT_EQ(boundary_coefficients(A({2, 3, 4, 5, 6})), (V{1, 2, 6, 7, 3, 1}));
  EXPECT_EQ(boundary_coefficients(A({3, 3, 3, 3})), (V{1, 2, 5, 5, 2, 1}));
  EXPECT_THROW(boundary_coefficients(A({1, 3})), Error);
  EXPECT_THROW(boundary_coefficients(A({3, 1, 1})), Error);
}

TEST(BoundaryCoefficients, EvenLengthEndingInTwo) {
  // F_{2,2} = 1 + q + q^2 + q^3 + q^4.
  using V = std::array<Integer, 6>;
  EXPECT_EQ(boundary_coefficients(A({2, 2})), (V{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(boundary_coefficients(A({3, 2})), (V{1, 1, 1, 2, 1, 1}));
}

TEST(BoundaryCoefficients, SingleEntryOverlap) {
  using V = std::array<Integer, 6>;
  EXPECT_EQ(boundary_coefficients(A({2})), (V{1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(boundary_coefficients(A({3})), (V{1, 0, 1, 0, 1, 1}));
  EXPECT_EQ(boundary_coefficients(A({7})), (V{1, 0, 1, 1, 1, 1}));
}

TEST(BoundaryCoefficients, TableRows) {
  // Rows for a_1, a_n >= 3 and interior a_i >= 2. A row lists six distinct
  // coefficients, so a single entry needs l = a_1 >= 5.
  using V = std::array<Integer, 6>;
  const V rows[] = {{1, 0, 1, 1, 1, 1},  {1, 1, 2, 2, 1, 1},   {1, 1, 3, 4, 2, 1},
                    {1, 2, 5, 5, 2, 1},  {1, 2, 6, 8, 3, 1},   {1, 3, 9, 9, 3, 1},
                    {1, 3, 10, 13, 4, 1}, {1, 4, 14, 14, 4, 1}, {1, 4, 15, 19, 5, 1},
                    {1, 5, 20, 20, 5, 1}};
  for (std::size_t n = 1; n <= 10; ++n) {
    for (long a = n == 1 ? 5 : 3; a <= 6; ++a) {
      std::vector<Integer> entries(n, Integer(a));
      ASSERT_EQ(boundary_coefficients(PositiveCF(entries)), rows[n - 1]) << n << " " << a;
      for (std::size_t i = 1; i + 1 < n; ++i) entries[i] = 2;
      ASSERT_EQ(boundary_coefficients(PositiveCF(entries)), rows[n - 1]) << n << " " << a;
    }
  }
}

TEST(BoundaryCoefficients, MatchDirectFormula) {
  for_each_positive_cf(14, 9, true, [](const PositiveCF& cf) {
    if (cf[0] < 2 || cf[cf.size() - 1] < 2) return;
    HLPoly f = jones_direct(cf).normalized;
    std::int64_t ell = cf.total().get_si();
    std::array<std::int64_t, 6> at = {0, 1, 2, ell - 2, ell - 1, ell};
    std::array<Integer, 6> v = boundary_coefficients(cf);
    for (std::size_t i = 0; i < 6; ++i) {
      ASSERT_EQ(Integer(::abs(f.coeff(HalfInt::from_int(-at[i])))), v[i]) << cf.to_string() << " v" << i;
    }
  });
}

TEST(VolumeBounds, Values) {
  VolumeBounds a = volume_bounds(A({3, 3, 3}));
  EXPECT_NEAR(a.lower, 0.35367, 1e-9);
  EXPECT_NEAR(a.upper, 60.894, 1e-9);
  VolumeBounds b = volume_bounds(A({3, 4}));
  EXPECT_DOUBLE_EQ(b.lower, 0.0);
  EXPECT_NEAR(b.upper, 30.447, 1e-9);
  VolumeBounds c = volume_bounds(A({3, 4, 5, 3}));
  EXPECT_NEAR(c.lower, 0.70734, 1e-9);
  EXPECT_NEAR(c.upper, 91.341, 1e-9);
  try {
    volume_bounds(A({3, 2, 3}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kHypothesisViolated);
  }
}

TEST(Mirror, Examples) {
  JonesResult v4 = jones_recursive(E({4}));
  EXPECT_EQ(mirror(v4).poly, jones_recursive(E({-4})).poly);
  EXPECT_EQ(mirror(mirror(v4)).poly, v4.poly);
  EXPECT_EQ(mirror(mirror(v4)).degree, v4.degree);
  EXPECT_EQ(mirror(jones_recursive(E({-2, 2}))).poly, P("t + t^3 - t^4"));
  EXPECT_EQ(mirror(jones_recursive(E({-2, 2}))).poly, jones_recursive(E({2, -2})).poly);
}

}  // namespace
}  // namespace twobridge
