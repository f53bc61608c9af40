#pragma once

#include <vector>

#include "gamma2/polynomial.hpp"
#include "gamma2/qforms.hpp"

namespace gamma2 {

enum class Basis { lambda, inv_lambda };

// Result of rewriting a q-expansion as a polynomial in lambda or 1/lambda by
// leading-term elimination.  residual_ok means the reconstruction matches the
// input on every coefficient the truncation window can see; extractions with
// residual_ok == false must not be trusted.
struct LambdaPolynomialResult {
  Basis basis = Basis::lambda;
  Polynomial poly;
  bool residual_ok = false;
  long trunc_used = 0;
};

// Eliminates the lowest-order term of the running remainder with the
// appropriate power of the basis series.  Terms that no admissible power can
// match (wrong exponent residue, or needing degree > max_deg) are left in the
// remainder and clear residual_ok.  Throws std::runtime_error on insufficient
// truncation (the message names the truncation the headroom rule asks for).
// The checked extractors below turn residual_ok == false into an error that
// states the series is not a polynomial of stated degree.
LambdaPolynomialResult to_lambda_polynomial(const QSeries& f, Basis basis, int max_deg,
                                            const LambdaSeries& lam);

// Degree k-1 polynomial p_{2k+1} extracted from 4 ghat_{2k+1}/(theta3^{4k} theta2^2).
Polynomial p_poly_oracle(int k, long trunc);

// Monic degree-k polynomial in 1/lambda carrying the odd-weight series:
// E_{2k+1,chi} / (theta2^{4k} theta3^2).
Polynomial e_tilde_odd(int k, long trunc);

// Monic degree-k polynomial in 1/lambda for the even series E_{2k}^{+-} / theta2^{4k}.
Polynomial e_tilde_even(int k, int sign, long trunc,
                        EvenReading reading = EvenReading::resolved);

// Batched variants sharing incremental theta powers (the per-k functions
// recompute powers from scratch; the tables keep a running product).
std::vector<Polynomial> p_poly_oracle_table(int k_max, long trunc);
std::vector<Polynomial> e_tilde_odd_table(int k_max, long trunc);
std::vector<Polynomial> e_tilde_even_table(int k_max, int sign, long trunc);

}  // namespace gamma2
