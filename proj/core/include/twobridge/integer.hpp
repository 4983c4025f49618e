#pragma once

#include <gmpxx.h>

#include <string>

namespace twobridge {

// Numerators of continued fractions grow exponentially with the number of
// entries, so every integer quantity in the library is arbitrary precision.
using Integer = mpz_class;

inline int sign_of(const Integer& x) { return sgn(x); }

inline bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

inline bool is_odd(const Integer& x) { return !is_even(x); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace twobridge
