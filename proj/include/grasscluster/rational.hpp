#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace gcl {

// Exact arbitrary-precision scalars.  mpq_class values are kept canonical
// by GMP: lowest terms, denominator > 0, equality is exact.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sign(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rational rat_parse(const std::string& s);

// "p" if the denominator is 1, else "p/q".
std::string rat_str(const Rational& x);

// Integer power; base must be nonzero when e < 0.
Rational rat_pow(const Rational& base, long e);

// Uniform small rational helpers for randomized identity tests.  All
// randomness in the library flows through explicitly seeded engines.
using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] as a Rational.
Rational random_int_rational(Rng& rng, long lo, long hi);

// Uniform nonzero integer in [-bound, bound] \ {0}.
Rational random_nonzero_rational(Rng& rng, long bound);

}  // namespace gcl
