#include "twobridge/laurent.hpp"

#include <cctype>
#include <cstdlib>

namespace twobridge {

// ---------------------------------------------------------------- HalfInt

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(Errc::kParseError, "malformed exponent '" + s + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  std::string head = s.substr(0, slash);
  char* end = nullptr;
  long long n = std::strtoll(head.c_str(), &end, 10);
  if (head.empty() || *end != '\0') bad();
  if (slash == std::string::npos) return from_int(n);
  if (s.substr(slash + 1) != "2") bad();
  return from_halves(n);
}

// ---------------------------------------------------------------- HLPoly

HLPoly::HLPoly(int c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

HLPoly::HLPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

HLPoly HLPoly::monomial(const Integer& coeff, HalfInt exponent) {
  HLPoly p;
  p.add_term(exponent.halves(), coeff);
  return p;
}

HLPoly HLPoly::t_halves(std::int64_t halves) {
  HLPoly p;
  p.terms_.emplace(halves, Integer(1));
  return p;
}

HLPoly HLPoly::q_pow(std::int64_t k) {
  // (-t^{-1})^k = (-1)^k t^{-k}
  HLPoly p;
  p.terms_.emplace(-2 * k, Integer(k % 2 == 0 ? 1 : -1));
  return p;
}

Integer HLPoly::coeff(HalfInt exponent) const {
  auto it = terms_.find(exponent.halves());
  return it == terms_.end() ? Integer(0) : it->second;
}

void HLPoly::add_term(std::int64_t halves, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(halves, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

HLPoly& HLPoly::operator+=(const HLPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HLPoly& HLPoly::operator-=(const HLPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

HLPoly operator-(const HLPoly& a) {
  HLPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

HLPoly operator*(const HLPoly& a, const HLPoly& b) {
  HLPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

HLPoly HLPoly::shifted(std::int64_t halves) const {
  HLPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + halves, c);
  return out;
}

HLPoly HLPoly::divided_by(const HLPoly& divisor) const {
  if (divisor.is_zero()) fail(Errc::kZeroPolynomial, "division by the zero polynomial");
  HLPoly quotient;
  HLPoly remainder = *this;
  if (remainder.is_zero()) return quotient;
  const std::int64_t lowest_allowed =
      terms_.begin()->first - divisor.terms_.begin()->first;
  const auto& [dlead_e, dlead_c] = *divisor.terms_.rbegin();
  while (!remainder.is_zero()) {
    const auto& [rlead_e, rlead_c] = *remainder.terms_.rbegin();
    std::int64_t e = rlead_e - dlead_e;
    if (e < lowest_allowed || rlead_c % dlead_c != 0) {
      fail(Errc::kInvalidArgument, "polynomial division is not exact");
    }
    HLPoly step = monomial(rlead_c / dlead_c, HalfInt::from_halves(e));
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

namespace {

std::string exponent_text(std::int64_t halves) {
  return HalfInt::from_halves(halves).to_string();
}

}  // namespace

std::string HLPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = ::abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += e == 2 ? std::string("t") : "t^(" + exponent_text(e) + ")";
  }
  return out;
}

std::string HLPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = ::abs(c);
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 't';
    if (e != 2) out += "^{" + exponent_text(e) + "}";
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  HLPoly parse() {
    HLPoly out;
    skip_space();
    if (at_end()) error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      out += parse_term(sign);
      skip_space();
    }
    return out;
  }

 private:
  HLPoly parse_term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      coeff = Integer(std::string(text_.substr(start, pos_ - start)));
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 't') error("expected 't' after '*'");
      }
    }
    std::int64_t halves = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      halves = 2;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        halves = parse_exponent().halves();
      }
    } else if (!have_coeff) {
      error("expected a coefficient or 't'");
    }
    return HLPoly::monomial(coeff * sign, HalfInt::from_halves(halves));
  }

  HalfInt parse_exponent() {
    bool paren = false;
    char close = ')';
    if (peek() == '(' || peek() == '{') {
      close = peek() == '(' ? ')' : '}';
      paren = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                ((c == '-' || c == '+') && pos_ == start);
      if (!ok) break;
      ++pos_;
    }
    HalfInt e = HalfInt::parse(text_.substr(start, pos_ - start));
    if (paren) {
      if (at_end() || peek() != close) error("unbalanced exponent bracket");
      ++pos_;
    }
    return e;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::kParseError,
         "polynomial parse error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HLPoly HLPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- free functions

HLPoly bar(const HLPoly& p) {
  HLPoly out;
  for (const auto& [e, c] : p.terms()) out += HLPoly::monomial(c, HalfInt::from_halves(-e));
  return out;
}

HLPoly q_integer(std::int64_t b, bool barred) {
  if (b < 1) fail(Errc::kInvalidArgument, "q-integer needs b >= 1");
  HLPoly out;
  for (std::int64_t k = 0; k < b; ++k) {
    Integer c = k % 2 == 0 ? 1 : -1;
    out += HLPoly::monomial(c, HalfInt::from_int(barred ? k : -k));
  }
  return out;
}

LeadingTerm leading_term(const HLPoly& p) {
  if (p.is_zero()) fail(Errc::kZeroPolynomial, "the zero polynomial has no leading term");
  const auto& [e, c] = *p.terms().rbegin();
  return {HalfInt::from_halves(e), c};
}

LeadingTerm trailing_term(const HLPoly& p) {
  if (p.is_zero()) fail(Errc::kZeroPolynomial, "the zero polynomial has no trailing term");
  const auto& [e, c] = *p.terms().begin();
  return {HalfInt::from_halves(e), c};
}

HalfInt width(const HLPoly& p) {
  return leading_term(p).degree - trailing_term(p).degree;
}

bool on_integer_grid(const HLPoly& p) {
  if (p.is_zero()) return true;
  bool integer = p.terms().begin()->first % 2 == 0;
  for (const auto& [e, c] : p.terms()) {
    if ((e % 2 == 0) != integer) {
      fail(Errc::kMixedGrid, "polynomial mixes integer and half-integer exponents");
    }
  }
  return integer;
}

bool is_alternating(const HLPoly& p) {
  on_integer_grid(p);
  int expected = 0;
  for (const auto& [e, c] : p.terms()) {
    // Exponents on one grid differ by whole units of two halves.
    std::int64_t step = (e - p.terms().begin()->first) / 2;
    int parity = step % 2 == 0 ? 1 : -1;
    int s = sgn(c) * parity;
    if (expected == 0) {
      expected = s;
    } else if (s != expected) {
      return false;
    }
  }
  return true;
}

}  // namespace twobridge
