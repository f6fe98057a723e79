#include "grasscluster/rational.hpp"

#include "grasscluster/errors.hpp"

namespace gcl {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw parameter_error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw parameter_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw parameter_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& x) { return x.get_str(); }

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw degenerate_error("0 raised to a negative power");
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  // num/den are already coprime, so the power is canonical.
  return out;
}

Rational random_int_rational(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Rational(d(rng));
}

Rational random_nonzero_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  long v = 0;
  while (v == 0) v = d(rng);
  return Rational(v);
}

}  // namespace gcl
