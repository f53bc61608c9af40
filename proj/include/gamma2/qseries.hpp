#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gamma2/rational.hpp"

namespace gamma2 {

// Laurent series in q with exponents on the (1/8)-integer grid: the
// coefficient at index n multiplies q^{n/8}.  Truncation is explicit and
// pessimistic: coefficients at n >= trunc() are unknown, and reading one
// throws instead of returning zero.  Exponents below min_exp() are exactly
// zero.  Values are immutable after construction.
class QSeries {
 public:
  static constexpr int kGridDen = 8;

  // Truncation used for exactly-known values (constants, empty products):
  // large enough to never constrain a computation, small enough to keep the
  // window arithmetic inside long.
  static constexpr long kExactTrunc = 1L << 40;

  static QSeries zero(long trunc);
  static QSeries constant(const Rat& a, long trunc);
  static QSeries one() { return constant(Rat(1), kExactTrunc); }
  static QSeries monomial(const Rat& a, long n, long trunc);
  // from (exponent, coefficient) pairs
  static QSeries from_terms(std::vector<std::pair<long, Rat>> terms, long trunc);

  long trunc() const { return trunc_; }
  // Lowest exponent with a nonzero coefficient; trunc() for the zero series.
  long min_exp() const { return base_; }
  bool is_zero_on_window() const { return c_.empty(); }

  // Throws for n >= trunc(); exact zero below min_exp().
  Rat coeff(long n) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& s, const QSeries& a);

  QSeries invert() const;
  QSeries pow(unsigned e) const;
  // q -> q^m on exponents (the substitution z -> m z); m >= 1.
  QSeries substitute_q_power(int m) const;
  // Forget coefficients at exponents >= new_trunc (new_trunc <= trunc()).
  QSeries truncate_to(long new_trunc) const;

  std::vector<std::pair<long, Rat>> nonzero_terms() const;
  std::string str(size_t max_terms = 12) const;

 private:
  QSeries(long base, long trunc, std::vector<Rat> c)
      : base_(base), trunc_(trunc), c_(std::move(c)) {
    normalize();
  }
  void normalize();

  long base_ = 0;   // exponent of c_[0]; equals trunc_ for the zero series
  long trunc_ = 0;  // exclusive upper bound of known exponents
  std::vector<Rat> c_;
};

// True when every known coefficient of a-b is zero (equality as far as the
// common truncation window can tell).
bool agree_on_window(const QSeries& a, const QSeries& b);

}  // namespace gamma2
