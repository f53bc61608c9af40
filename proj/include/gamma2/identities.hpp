#pragma once

#include <string>
#include <vector>

#include "gamma2/polynomial.hpp"
#include "gamma2/real.hpp"

namespace gamma2 {

enum class IdentityKind {
  thm_zeros,
  cor_32,
  thm_even_plus,
  thm_even_minus,
  cor_even_sum,
  c_consistency,
};

const char* identity_name(IdentityKind k);

// One verified identity: exact reports compare rationals, numeric reports
// compare high-precision reals against a tolerance.
struct IdentityReport {
  IdentityKind identity;
  int k = 0;
  bool exact_mode = true;
  Rat lhs_q, rhs_q;           // exact mode
  Real lhs_r, rhs_r;          // numeric mode
  Real tolerance;             // numeric mode
  bool pass = false;
  std::string note;           // extra diagnostics (cusp terms etc.)

  std::string lhs_str() const;
  std::string rhs_str() const;
};

// 4(-1)^k/e_{2k} == 4(2k+1) - 16 * Sigma, with Sigma read off the monic
// 1/lambda polynomial of the odd series; exact.
IdentityReport verify_thm_zeros(int k, long trunc);

// Transported zero sum: for each root rho of p_{2k+1} the zero moves to
// lambda-value (rho-1)/rho; the reciprocal sum plus the cusp multiplicity
// must reproduce Sigma.  Numeric at tolerance 1e-20; both partial sums are
// reported in `note`.
IdentityReport verify_cor_32(int k, long trunc, int precision_bits);

// Even-weight multiplier identity, exact: M = +-8k -+ 16 Sigma^{+-}.
IdentityReport verify_thm_even(int k, int sign, long trunc);

// k == Sigma^+ + Sigma^-, exact.
IdentityReport verify_cor_even_sum(int k, long trunc);

// L(2k+1, chi) as an alternating series with iterated pair-averaging; the
// error bound is the final bracket width, rigorous because the terms are
// totally monotone.  Throws when the cap cannot reach the requested accuracy.
struct BetaValue {
  Real value;
  Real error_bound;
  long terms_used = 0;
  int rounds_used = 0;
};

BetaValue beta_L(int k, int precision_bits);
// Fixed-effort variant used by tests to assert the doubled-iteration bound.
BetaValue beta_L_fixed(int k, int precision_bits, long terms, int rounds);

// beta_L(k) against e_{2k} (pi/2)^{2k+1} / (2 (2k)!), numeric at
// 2^{-precision_bits/2} unless a tighter tolerance is passed.
IdentityReport verify_c_consistency(int k, int precision_bits, double tolerance = 0.0);

// Range variants sharing incremental theta powers across k (the per-k
// functions rebuild the q-expansions from scratch).
std::vector<IdentityReport> verify_thm_zeros_range(int k_max, long trunc);
std::vector<IdentityReport> verify_thm_even_range(int k_max, int sign, long trunc);
std::vector<IdentityReport> verify_cor_even_sum_range(int k_max, long trunc);

}  // namespace gamma2
