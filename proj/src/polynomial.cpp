#include "gamma2/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gamma2 {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rat& a) {
  Polynomial p;
  if (a != 0) p.c_ = {a};
  return p;
}

Polynomial Polynomial::x() { return Polynomial({Rat(0), Rat(1)}); }

const Rat& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rat& s, const Polynomial& a) {
  if (s == 0) return Polynomial();
  Polynomial r(a);
  for (auto& v : r.c_) v *= s;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(c));
}

Rat Polynomial::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(Rat(1));
  Polynomial b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial r = a;
  std::vector<Rat> q;
  long db = b.degree();
  if (a.degree() >= db) q.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    Rat f = r.leading() / b.leading();
    q[static_cast<size_t>(shift)] = f;
    std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
    sub.push_back(f);
    r = r - Polynomial(std::move(sub)) * b;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  // Content-stripped Euclid; primitive() keeps the coefficients from blowing
  // up along the remainder chain.
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a;  // monic
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Int num_gcd(0), den_lcm(1);
  for (const auto& v : c_) {
    if (v == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);  // positive
  scale.canonicalize();
  return scale * *this;
}

Polynomial Polynomial::squarefree_part() const {
  if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  if (degree() == 0) return Polynomial::constant(Rat(1));
  Polynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return divrem(*this, g).first;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  // Yun: a1 = p/gcd(p,p'), b1 = p'/gcd(p,p'), then iterate.
  Polynomial g = Polynomial::gcd(p, p.derivative());
  Polynomial a = Polynomial::divrem(p, g).first;
  Polynomial b = Polynomial::divrem(p.derivative(), g).first;
  int i = 1;
  while (a.degree() > 0) {
    Polynomial c = b - a.derivative();
    Polynomial f = Polynomial::gcd(a, c);
    if (f.degree() > 0) out.emplace_back(f, i);
    a = Polynomial::divrem(a, f).first;
    b = Polynomial::divrem(c, f).first;
    ++i;
  }
  return out;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rat& v = c_[i];
    if (v == 0) continue;
    Rat a = v;
    if (!first) {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) os << rat_str(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace gamma2
