#pragma once

#include <vector>

#include "gamma2/polynomial.hpp"

namespace gamma2 {

// Secant numbers: entry j is e_{2j}, the coefficient of t^{2j}/(2j)! in
// sec(t) = 1/cos(t).  All positive integers: 1, 1, 5, 61, 1385, ...
std::vector<Int> euler_numbers(int j_max);

// B_0 .. B_{n_max} via sum_{j<=n} C(n+1,j) B_j = 0 (B_1 = -1/2).
std::vector<Rat> bernoulli_numbers(int n_max);

// Coefficient polynomials of the elliptic cosine: writing
//   cn(u) = sum_k (-1)^k p_{2k+1}(x) u^{2k} / (2k)!
// with x the squared modulus, the table is generated by the second-order
// recursion obtained by differentiating
//   (cn')^2 = (1 - cn^2)(1 - x + x cn^2),
// namely cn'' = (2x - 1) cn - 2x cn^3.
struct CnCoefficientTable {
  int k_max = 0;
  std::vector<Polynomial> polys;  // entry k is p_{2k+1}
};

// Throws std::logic_error if the checked regularities fail (constant term 1,
// degree k-1, nonnegative integer coefficients; the last is an observed
// pattern of the family, not a theorem).
CnCoefficientTable cn_polynomials(int k_max);

}  // namespace gamma2
