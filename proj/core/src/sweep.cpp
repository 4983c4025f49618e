#include "twobridge/sweep.hpp"

#include <cstdint>
#include <numeric>

#include "twobridge/jones.hpp"
#include "twobridge/snake.hpp"
#include "twobridge/ypoly.hpp"

namespace twobridge {

namespace {

void even_rec(std::vector<Integer>& prefix, int remaining, int max_entry,
              const std::function<void(const EvenCF&)>& fn) {
  if (!prefix.empty()) fn(EvenCF(prefix));
  for (int b = 2; b <= std::min(remaining, max_entry); b += 2) {
    for (int s : {1, -1}) {
      prefix.push_back(s * b);
      even_rec(prefix, remaining - b, max_entry, fn);
      prefix.pop_back();
    }
  }
}

void positive_rec(std::vector<Integer>& prefix, int remaining, int max_entry, bool canonical_only,
                  const std::function<void(const PositiveCF&)>& fn) {
  if (!prefix.empty() && (!canonical_only || prefix.size() == 1 || prefix.back() >= 2)) {
    fn(PositiveCF(prefix));
  }
  for (int a = 1; a <= std::min(remaining, max_entry); ++a) {
    prefix.push_back(a);
    positive_rec(prefix, remaining - a, max_entry, canonical_only, fn);
    prefix.pop_back();
  }
}

class Tally {
 public:
  explicit Tally(std::string name) { t_.name = std::move(name); }
  void record(bool ok, const std::string& input) {
    ++t_.checked;
    if (ok) return;
    if (t_.failed++ == 0) t_.first_failure = input;
  }
  const CheckTally& result() const { return t_; }

 private:
  CheckTally t_;
};

HLPoly assemble(const DegreeSign& ds, const HLPoly& f) {
  HLPoly p = f.shifted(ds.degree.halves());
  return ds.sign == Sign::kMinus ? -p : p;
}

Integer sum_of(const std::vector<Integer>& xs) {
  return std::accumulate(xs.begin(), xs.end(), Integer(0));
}

}  // namespace

void for_each_even_cf(int max_sum, int max_entry, const std::function<void(const EvenCF&)>& fn) {
  std::vector<Integer> prefix;
  even_rec(prefix, max_sum, max_entry, fn);
}

void for_each_positive_cf(int max_sum, int max_entry, bool canonical_only,
                          const std::function<void(const PositiveCF&)>& fn) {
  std::vector<Integer> prefix;
  positive_rec(prefix, max_sum, max_entry, canonical_only, fn);
}

std::size_t SweepSummary::total_checked() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.checked;
  return n;
}

std::size_t SweepSummary::total_failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

SweepSummary run_sweep(int max_sum) {
  Tally via_f("jones_recursive = jones_via_f");
  Tally f_rec("assembled f_recursive = jones_recursive");
  Tally f_snake("specialize_y(f_polynomial) = specialized_f_even");
  Tally degree("degree and leading sign");
  Tally widths("width = sum of positive entries");
  Tally alternating("alternating with unit end coefficients");
  Tally grid("exponent grid parity");
  Tally mirrored("mirror = bar");
  Tally snakes("even snake graph matches positive snake graph");

  for_each_even_cf(max_sum, 6, [&](const EvenCF& cf) {
    std::string in = cf.to_string();
    JonesResult v = jones_recursive(cf);
    via_f.record(jones_via_f(cf).poly == v.poly, in);

    DegreeSign ds = degree_and_sign(cf);
    degree.record(ds.degree == v.degree && ds.sign == v.leading_sign, in);

    Rat value = cf.value();
    PositiveCF pos = positive_cf(value.abs());
    widths.record(width(v.poly) == HalfInt::from_int(sum_of(pos.entries()).get_si()), in);

    LeadingTerm lo = trailing_term(v.poly);
    alternating.record(is_alternating(v.poly) && ::abs(lo.coeff) == 1, in);

    bool m_even = cf.size() % 2 == 0;
    bool p_odd = is_odd(value.num());
    grid.record(on_integer_grid(v.poly) == m_even && m_even == p_odd, in);

    mirrored.record(jones_recursive(cf.negated()).poly == bar(v.poly), in);

    SnakeGraph g = snake_from_even(cf);
    SnakeGraph h = snake_from_positive(pos);
    snakes.record(isomorphic(g, h) && tile_count_even(cf) == g.d &&
                      count_matchings(g) == ::abs(value.num()),
                  in);

    if (cf[0] > 0) {
      HLPoly f = specialized_f_even(cf);
      f_rec.record(assemble(ds, f_recursive(cf)) == v.poly, in);
      if (g.d <= kMaxTiles && count_matchings(g) <= kDefaultMatchingBudget) {
        f_snake.record(specialize_y(f_polynomial(g), g.d) == f, in);
      }
    }
  });

  Tally counts("matchings = numerator = Euler-Minding sum");
  Tally direct("jones_direct = jones_recursive");
  Tally reflection("reflection identity");
  Tally boundary("boundary coefficient formulas");

  for_each_positive_cf(max_sum, 9, true, [&](const PositiveCF& cf) {
    std::string in = cf.to_string();
    Integer n = numerator_rec(cf.entries());
    counts.record(count_matchings(snake_from_positive(cf)) == n &&
                      euler_minding(cf.entries()) == n,
                  in);

    Rat value = cf.value();
    if (Rat(1) < value) {
      JonesResult v = jones_recursive(oriented_even_cf(value));
      direct.record(jones_direct(cf).poly == v.poly, in);
    }

    if (cf[0] >= 2) {
      std::vector<Integer> longer = {Integer(1), cf[0] - 1};
      longer.insert(longer.end(), cf.entries().begin() + 1, cf.entries().end());
      std::int64_t d = cf.tiles().get_si();
      HLPoly reflected = HLPoly::q_pow(d + 1) * bar(specialized_f_positive(PositiveCF(longer)));
      reflection.record(specialized_f_positive(cf) == reflected, in);
    }

    if (cf[0] >= 2 && cf[cf.size() - 1] >= 2) {
      HLPoly normalized = jones_direct(cf).normalized;
      std::int64_t ell = cf.total().get_si();
      std::array<std::int64_t, 6> positions = {0, 1, 2, ell - 2, ell - 1, ell};
      std::array<Integer, 6> expected = boundary_coefficients(cf);
      bool ok = true;
      for (std::size_t i = 0; i < 6; ++i) {
        Integer actual = ::abs(normalized.coeff(HalfInt::from_int(-positions[i])));
        ok = ok && actual == expected[i];
      }
      boundary.record(ok, in);
    }
  });

  SweepSummary out;
  out.max_sum = max_sum;
  for (const Tally* t : {&via_f, &f_rec, &f_snake, &degree, &widths, &alternating, &grid,
                         &mirrored, &snakes, &counts, &direct, &reflection, &boundary}) {
    out.checks.push_back(t->result());
  }
  return out;
}

}  // namespace twobridge
