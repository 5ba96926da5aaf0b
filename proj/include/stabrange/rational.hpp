#pragma once

#include <gmpxx.h>

#include <string>

#include "stabrange/errors.hpp"

namespace stabrange {

// All exact arithmetic runs on GMP rationals; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Renders "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
  Rat canon = q;
  canon.canonicalize();
  if (is_integer(canon)) return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    fail(errc::invalid_params, "cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline Int factorial_int(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Bit length of |num| + bit length of den; the pivoting weight used by the
// exact row-reduction kernel.
inline size_t rat_bit_size(const Rat& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace stabrange
