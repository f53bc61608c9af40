#pragma once

#include <gmpxx.h>

#include <string>

namespace gamma2 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  Rat r;
  if (e >= 0) {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
  }
  r.canonicalize();
  return r;
}

inline int sign(const Rat& x) { return sgn(x); }

// "num" when the denominator is 1, else "num/den"; lossless round-trip.
inline std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace gamma2
