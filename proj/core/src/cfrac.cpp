#include "twobridge/cfrac.hpp"

#include <sstream>

namespace twobridge {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kZeroTail: return "ZeroTail";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kNoEvenQuotient: return "NoEvenQuotient";
    case Errc::kBothOdd: return "BothOdd";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kMixedGrid: return "MixedGrid";
    case Errc::kTooManyTiles: return "TooManyTiles";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kWrongOrientation: return "WrongOrientation";
    case Errc::kHypothesisViolated: return "HypothesisViolated";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
    case Errc::kAmbiguousCF: return "AmbiguousCF";
    case Errc::kCrossCheckMismatch: return "CrossCheckMismatch";
  }
  return "Unknown";
}

std::string format_signs(const std::vector<Sign>& signs) {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ',';
    out += sign_char(signs[i]);
  }
  out += ')';
  return out;
}

std::string format_entries(const std::vector<Integer>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].get_str();
  }
  out += ']';
  return out;
}

// ---------------------------------------------------------------- Rat

Rat::Rat(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) fail(Errc::kInvalidArgument, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1 && g != 0) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) fail(Errc::kInvalidArgument, "division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rat::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

// ---------------------------------------------------------------- PositiveCF

PositiveCF::PositiveCF(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::kInvalidArgument, "positive continued fraction needs at least one entry");
  for (const Integer& a : entries_) {
    if (a < 1) {
      fail(Errc::kInvalidArgument,
           "positive continued fraction entries must be >= 1, got " + a.get_str());
    }
  }
}

std::vector<Integer> PositiveCF::partial_sums() const {
  std::vector<Integer> sums;
  sums.reserve(entries_.size());
  Integer running = 0;
  for (const Integer& a : entries_) {
    running += a;
    sums.push_back(running);
  }
  return sums;
}

Integer PositiveCF::total() const {
  Integer running = 0;
  for (const Integer& a : entries_) running += a;
  return running;
}

Rat PositiveCF::value() const { return eval_cf(entries_); }

PositiveCF PositiveCF::with_trailing_one() const {
  if (entries_.back() < 2) {
    fail(Errc::kOutOfRange, "last entry must be >= 2 to split off a trailing 1");
  }
  std::vector<Integer> out = entries_;
  out.back() -= 1;
  out.push_back(1);
  return PositiveCF(std::move(out));
}

std::string PositiveCF::to_string() const { return format_entries(entries_); }

// ---------------------------------------------------------------- EvenCF

EvenCF::EvenCF(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::kInvalidArgument, "even continued fraction needs at least one entry");
  for (const Integer& b : entries_) {
    if (b == 0 || is_odd(b)) {
      fail(Errc::kInvalidArgument,
           "even continued fraction entries must be even and nonzero, got " + b.get_str());
    }
  }
}

Rat EvenCF::value() const { return eval_cf(entries_); }

EvenCF EvenCF::negated() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const Integer& b : entries_) out.push_back(-b);
  return EvenCF(std::move(out));
}

std::string EvenCF::to_string() const { return format_entries(entries_); }

// ---------------------------------------------------------------- operations

Rat eval_cf(std::span<const Integer> entries) {
  if (entries.empty()) fail(Errc::kInvalidArgument, "empty continued fraction");
  if (entries.back() == 0) {
    fail(Errc::kZeroTail, "last entry of a continued fraction must be nonzero");
  }
  Rat value(entries.back());
  for (std::size_t k = entries.size() - 1; k-- > 0;) {
    if (value.num() == 0) {
      fail(Errc::kZeroTail, "continued fraction tail starting at entry " +
                                std::to_string(k + 2) + " evaluates to 0");
    }
    value = Rat(entries[k]) + Rat(value.den(), value.num());
  }
  return value;
}

PositiveCF positive_cf(const Rat& r) {
  if (r < Rat(1)) {
    fail(Errc::kOutOfRange, "positive expansion needs a value >= 1, got " + r.to_string());
  }
  std::vector<Integer> entries;
  Integer p = r.num();
  Integer q = r.den();
  while (q != 0) {
    Integer a;
    Integer rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    entries.push_back(a);
    p = q;
    q = rem;
  }
  return PositiveCF(std::move(entries));
}

EvenDivision even_division(const Integer& p, const Integer& q) {
  if (q == 0) fail(Errc::kInvalidArgument, "even division by zero");
  Integer divisor = ::abs(q);
  Integer a;
  Integer r;
  mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), divisor.get_mpz_t());
  if (is_odd(a)) {
    a += 1;
    r -= divisor;
  }
  if (q < 0) a = -a;
  if (a == 0) {
    fail(Errc::kNoEvenQuotient, "no nonzero even quotient for " + p.get_str() +
                                    " / " + q.get_str());
  }
  return {a, r};
}

EvenCF even_cf(const Rat& r) {
  if (is_odd(r.num()) && is_odd(r.den())) {
    fail(Errc::kBothOdd, r.to_string() + " has odd numerator and denominator; no even expansion");
  }
  if (r.abs() <= Rat(1)) {
    fail(Errc::kOutOfRange, "even expansion needs |r| > 1, got " + r.to_string());
  }
  std::vector<Integer> entries;
  Integer p = r.num();
  Integer q = r.den();
  for (;;) {
    EvenDivision step = even_division(p, q);
    entries.push_back(step.quotient);
    if (step.remainder == 0) break;
    p = q;
    q = step.remainder;
  }
  return EvenCF(std::move(entries));
}

namespace {

void require_link_fraction(const Rat& r) {
  if (!(r > Rat(1))) {
    fail(Errc::kOutOfRange, "a 2-bridge link fraction needs p > q >= 1, got " + r.to_string());
  }
}

}  // namespace

EvenCF even_cf_for_link(const Rat& r) {
  require_link_fraction(r);
  if (is_even(r.num()) || is_even(r.den())) return even_cf(r);
  return even_cf(Rat(r.num(), r.num() - r.den()));
}

EvenCF oriented_even_cf(const Rat& r) {
  require_link_fraction(r);
  if (is_even(r.num()) || is_even(r.den())) return even_cf(r);
  return even_cf(Rat(r.num(), r.num() - r.den())).negated();
}

SignSeq sign_sequence(const EvenCF& cf) {
  SignSeq out;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    Sign block = sign_from_int(sign_of(cf[i]));
    if (i % 2 == 1) block = -block;
    out.block_offsets.push_back(out.signs.size());
    unsigned long len = Integer(::abs(cf[i])).get_ui();
    out.signs.insert(out.signs.end(), len, block);
  }
  return out;
}

TypeSeq type_sequence(const EvenCF& cf) {
  TypeSeq out;
  out.types.reserve(cf.size());
  for (std::size_t i = 0; i < cf.size(); ++i) {
    Sign s = sign_from_int(sign_of(cf[i]));
    out.types.push_back(i % 2 == 0 ? s : -s);
  }
  return out;
}

std::size_t tau(const TypeSeq& ts) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < ts.types.size(); ++i) {
    if (ts.types[i] == Sign::kPlus && ts.types[i + 1] == Sign::kPlus) ++count;
  }
  return count;
}

}  // namespace twobridge
