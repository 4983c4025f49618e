#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/integer.hpp"
#include "twobridge/sign.hpp"

namespace twobridge {

// Reduced fraction num/den with den > 0; zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Integer num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Rat(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  Rat abs() const { return Rat(::abs(num_), den_); }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }

  std::string to_string() const;

 private:
  Integer num_;
  Integer den_;
};

// [a_1, ..., a_n] with every a_i >= 1.
class PositiveCF {
 public:
  explicit PositiveCF(std::vector<Integer> entries);

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  // Partial sums l_1, ..., l_n (l_i = a_1 + ... + a_i).
  std::vector<Integer> partial_sums() const;
  Integer total() const;
  // Number of tiles of the associated snake graph: l_n - 1.
  Integer tiles() const { return total() - 1; }

  Rat value() const;

  // The same value written as [a_1, ..., a_n - 1, 1]; requires a_n >= 2.
  PositiveCF with_trailing_one() const;

  std::string to_string() const;

  friend bool operator==(const PositiveCF&, const PositiveCF&) = default;

 private:
  std::vector<Integer> entries_;
};

// [b_1, ..., b_m] with every b_i even and nonzero.
class EvenCF {
 public:
  explicit EvenCF(std::vector<Integer> entries);

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  Rat value() const;
  // [-b_1, ..., -b_m]: the mirror link.
  EvenCF negated() const;

  std::string to_string() const;

  friend bool operator==(const EvenCF&, const EvenCF&) = default;

 private:
  std::vector<Integer> entries_;
};

struct SignSeq {
  std::vector<Sign> signs;
  // Start index of each |b_i|-block inside `signs`.
  std::vector<std::size_t> block_offsets;
};

struct TypeSeq {
  std::vector<Sign> types;
};

struct EvenDivision {
  Integer quotient;   // even, nonzero
  Integer remainder;  // in [-|q|, |q|)
};

// Right-to-left evaluation of a_1 + 1/(a_2 + 1/(... + 1/a_n)).
Rat eval_cf(std::span<const Integer> entries);

// Euclidean expansion of r >= 1; canonical form ends in a_n >= 2 when n >= 2.
PositiveCF positive_cf(const Rat& r);

// p = b*q + s with b even and -|q| <= s < |q|.
EvenDivision even_division(const Integer& p, const Integer& q);

// Unique even expansion of r = p/q with |r| > 1 and p, q not both odd.
EvenCF even_cf(const Rat& r);

// Even expansion naming the 2-bridge link of p/q (p > q >= 1): p/q itself
// when pq is even, otherwise p/(p-q).
EvenCF even_cf_for_link(const Rat& r);

// Even expansion whose link carries the orientation of the alternating
// diagram C[a_1, ..., a_n] of p/q: p/q when pq is even, otherwise the
// mirror expansion of -p/(p-q) (so C[3] = C[-2,2]).
EvenCF oriented_even_cf(const Rat& r);

SignSeq sign_sequence(const EvenCF& cf);
TypeSeq type_sequence(const EvenCF& cf);

// Number of (overlapping) occurrences of +,+ in the type sequence.
std::size_t tau(const TypeSeq& ts);

// N[] = 1, N[x_1] = x_1, N[x_1..x_k] = x_k N[x_1..x_{k-1}] + N[x_1..x_{k-2}].
// Works over any commutative ring constructible from an int.
template <class Ring>
Ring numerator_rec(std::span<const Ring> xs) {
  Ring before(0);  // N of the two-shorter prefix; N[x_1] = x_1 * 1 + 0
  Ring current(1);
  for (const Ring& x : xs) {
    Ring next = x * current + before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

template <class Ring>
Ring numerator_rec(const std::vector<Ring>& xs) {
  return numerator_rec(std::span<const Ring>(xs));
}

namespace detail {

template <class Ring>
void euler_minding_terms(std::span<const Ring> xs, std::size_t pos,
                         const Ring& prefix, Ring& sum) {
  if (pos == xs.size()) {
    sum = sum + prefix;
    return;
  }
  euler_minding_terms(xs, pos + 1, Ring(prefix * xs[pos]), sum);
  if (pos + 1 < xs.size()) euler_minding_terms(xs, pos + 2, prefix, sum);
}

}  // namespace detail

// Sum over all ways of deleting disjoint adjacent pairs from x_1 ... x_n of
// the product of the surviving entries. Division free; equals numerator_rec.
template <class Ring>
Ring euler_minding(std::span<const Ring> xs) {
  Ring sum(0);
  detail::euler_minding_terms(xs, 0, Ring(1), sum);
  return sum;
}

template <class Ring>
Ring euler_minding(const std::vector<Ring>& xs) {
  return euler_minding(std::span<const Ring>(xs));
}

std::string format_entries(const std::vector<Integer>& entries);

}  // namespace twobridge
