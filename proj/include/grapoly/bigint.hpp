#ifndef GRAPOLY_BIGINT_HPP
#define GRAPOLY_BIGINT_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

namespace grapoly {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e >= 0) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  Rational inv = 1 / base;
  return rat_pow(inv, -e);
}

inline std::string decimal(const Integer& v) { return v.get_str(10); }

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace grapoly

#endif
