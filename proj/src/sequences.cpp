#include "gamma2/sequences.hpp"

#include <stdexcept>

namespace gamma2 {

std::vector<Int> euler_numbers(int j_max) {
  if (j_max < 0) throw std::invalid_argument("euler_numbers: j_max must be >= 0");
  // sec * cos = 1: convolving the coefficient sequences in t^2 gives
  //   e_{2n} = sum_{j=1..n} (-1)^{j+1} C(2n, 2j) e_{2(n-j)}.
  std::vector<Int> e(static_cast<size_t>(j_max) + 1);
  e[0] = 1;
  for (int n = 1; n <= j_max; ++n) {
    Int s(0);
    for (int j = 1; j <= n; ++j) {
      Int t = binomial(2 * static_cast<unsigned long>(n), 2 * static_cast<unsigned long>(j)) *
              e[static_cast<size_t>(n - j)];
      if (j % 2 == 1)
        s += t;
      else
        s -= t;
    }
    e[static_cast<size_t>(n)] = s;
  }
  return e;
}

std::vector<Rat> bernoulli_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_numbers: n_max must be >= 0");
  std::vector<Rat> b(static_cast<size_t>(n_max) + 1);
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rat s(0);
    for (int j = 0; j < n; ++j)
      s += Rat(binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(j))) *
           b[static_cast<size_t>(j)];
    b[static_cast<size_t>(n)] = -s / Rat(n + 1);
  }
  return b;
}

CnCoefficientTable cn_polynomials(int k_max) {
  if (k_max < 0) throw std::invalid_argument("cn_polynomials: k_max must be >= 0");
  const Polynomial x = Polynomial::x();
  const Polynomial two_x_minus_1 = Rat(2) * x - Polynomial::constant(Rat(1));

  // a_k = (-1)^k p_{2k+1} / (2k)!; the recursion is
  //   a_{k+1} (2k+2)(2k+1) = (2x-1) a_k - 2x sum_{i+j+l=k} a_i a_j a_l.
  std::vector<Polynomial> a;
  a.push_back(Polynomial::constant(Rat(1)));
  for (int k = 0; k < k_max; ++k) {
    Polynomial cube;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j)
        cube = cube + a[static_cast<size_t>(i)] * a[static_cast<size_t>(j)] *
                          a[static_cast<size_t>(k - i - j)];
    Polynomial rhs = two_x_minus_1 * a[static_cast<size_t>(k)] - Rat(2) * (x * cube);
    a.push_back(Rat(1, (2 * static_cast<long>(k) + 2) * (2 * static_cast<long>(k) + 1)) * rhs);
  }

  CnCoefficientTable table;
  table.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    Rat scale = Rat(factorial(2 * static_cast<unsigned long>(k)));
    if (k % 2 == 1) scale = -scale;
    Polynomial p = scale * a[static_cast<size_t>(k)];
    if (p.coeff(0) != 1) throw std::logic_error("cn_polynomials: constant term is not 1");
    if (k >= 1 && p.degree() != k - 1)
      throw std::logic_error("cn_polynomials: unexpected degree");
    for (long i = 0; i <= p.degree(); ++i) {
      const Rat c = p.coeff(i);
      if (c.get_den() != 1 || sgn(c) < 0)
        throw std::logic_error("cn_polynomials: coefficient regularity violated");
    }
    table.polys.push_back(std::move(p));
  }
  return table;
}

}  // namespace gamma2
