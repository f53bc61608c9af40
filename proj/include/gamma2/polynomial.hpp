#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gamma2/rational.hpp"

namespace gamma2 {

// Dense univariate polynomial with exact rational coefficients.
// coeff(i) is the coefficient of x^i; the stored vector never has a
// trailing zero, and the zero polynomial is the empty vector (degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const Rat& a);
  static Polynomial x();

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& leading() const;
  Rat coeff(long i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rat& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const;
  Rat eval(const Rat& x) const;
  Polynomial pow(unsigned e) const;

  // Exact division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

  // Monic gcd over the rationals.
  static Polynomial gcd(Polynomial a, Polynomial b);

  // Scales so the coefficients are coprime integers with positive leading
  // coefficient times sign; the scale factor used is positive, so signs of
  // values are unchanged.
  Polynomial primitive() const;

  Polynomial squarefree_part() const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

// Yun's decomposition: returns pairs (f_i, i) with p = lc * prod f_i^i,
// the f_i squarefree and pairwise coprime, only nontrivial factors listed.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace gamma2
