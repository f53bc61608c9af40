#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "gamma2/rational.hpp"

namespace gamma2 {

// RAII wrapper over mpfr_t with explicit precision.  Binary operations round
// to nearest at the larger of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(const Rat& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Real of(const Int& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sgn() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Deterministic decimal rendering with the given significant digits.
  std::string str(int digits = 30) const;

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

  friend Real sin(const Real& a) { return un(a, mpfr_sin); }
  friend Real cos(const Real& a) { return un(a, mpfr_cos); }
  friend Real exp(const Real& a) { return un(a, mpfr_exp); }
  friend Real log(const Real& a) { return un(a, mpfr_log); }
  friend Real sqrt(const Real& a) { return un(a, mpfr_sqrt); }
  friend Real abs(const Real& a) { return un(a, mpfr_abs); }
  friend Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real mul_2si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(const Real& a, const Real& b, BinOp op) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real un(const Real& a, UnOp op) {
    Real r(a.prec());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm2()); }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.norm2();
    Complex p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  Complex pow_ui(unsigned long e, mpfr_prec_t prec) const {
    Complex r(prec);
    mpfr_set_si(r.re.raw(), 1, MPFR_RNDN);
    Complex b = *this;
    while (e) {
      if (e & 1ul) r = r * b;
      e >>= 1ul;
      if (e) b = b * b;
    }
    return r;
  }
};

}  // namespace gamma2
