#include "gamma2/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "gamma2/lambda_poly.hpp"
#include "gamma2/roots.hpp"
#include "gamma2/sequences.hpp"

namespace gamma2 {

const char* identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::thm_zeros: return "thm_zeros";
    case IdentityKind::cor_32: return "cor_32";
    case IdentityKind::thm_even_plus: return "thm_even_plus";
    case IdentityKind::thm_even_minus: return "thm_even_minus";
    case IdentityKind::cor_even_sum: return "cor_even_sum";
    case IdentityKind::c_consistency: return "c_consistency";
  }
  return "?";
}

std::string IdentityReport::lhs_str() const { return exact_mode ? rat_str(lhs_q) : lhs_r.str(); }
std::string IdentityReport::rhs_str() const { return exact_mode ? rat_str(rhs_q) : rhs_r.str(); }

namespace {

// Sigma = -(coefficient of x^{k-1}) of a monic degree-k polynomial.
Rat second_coefficient_sum(const Polynomial& e_tilde, int k) {
  if (e_tilde.degree() != k || (k >= 0 && e_tilde.coeff(k) != 1))
    throw std::logic_error("expected a monic polynomial of degree k");
  return k >= 1 ? Rat(-e_tilde.coeff(k - 1)) : Rat(0);
}

long auto_trunc(int k, long trunc) {
  const long need = 8L * k + 64;
  return trunc < need ? need : trunc;
}

}  // namespace

IdentityReport verify_thm_zeros(int k, long trunc) {
  if (k < 0) throw std::invalid_argument("verify_thm_zeros: k must be >= 0");
  trunc = auto_trunc(k, trunc);
  IdentityReport rep;
  rep.identity = IdentityKind::thm_zeros;
  rep.k = k;
  const Rat sigma = second_coefficient_sum(e_tilde_odd(k, trunc), k);
  const Int e2k = euler_numbers(k).back();
  rep.lhs_q = Rat((k % 2 == 0) ? 4 : -4) / Rat(e2k);
  rep.rhs_q = Rat(4 * (2 * static_cast<long>(k) + 1)) - Rat(16) * sigma;
  rep.pass = rep.lhs_q == rep.rhs_q;
  return rep;
}

IdentityReport verify_cor_32(int k, long trunc, int precision_bits) {
  if (k < 1) throw std::invalid_argument("verify_cor_32: k must be >= 1");
  trunc = auto_trunc(k, trunc);
  const mpfr_prec_t prec = precision_bits;
  IdentityReport rep;
  rep.identity = IdentityKind::cor_32;
  rep.k = k;
  rep.exact_mode = false;
  rep.tolerance = Real::of(Rat(Int(1), Int("100000000000000000000")), prec);  // 1e-20

  Polynomial e_tilde = e_tilde_odd(k, trunc);
  const Rat sigma = second_coefficient_sum(e_tilde, k);

  // Cusp multiplicity: order of the root x = 1 of the monic polynomial.
  int cusp = 0;
  {
    Polynomial q = e_tilde;
    const Polynomial x_minus_1({Rat(-1), Rat(1)});
    while (!q.is_zero() && q.eval(Rat(1)) == 0) {
      q = Polynomial::divrem(q, x_minus_1).first;
      ++cusp;
    }
  }

  // Transported sum over the roots of p_{2k+1}.
  const Polynomial p = cn_polynomials(k).polys.back();
  auto roots = sturm_isolate(p);
  long root_count = 0;
  for (const auto& r : roots) root_count += r.multiplicity;
  if (root_count + cusp != k) {
    rep.pass = false;
    rep.note = "transport check failed: " + std::to_string(root_count) +
               " real roots plus cusp multiplicity " + std::to_string(cusp) +
               " do not account for degree " + std::to_string(k);
    rep.lhs_r = Real::of(sigma, prec);
    rep.rhs_r = Real(prec);
    return rep;
  }

  const Rat tol_rat(Int(1), Int("10000000000000000000000000"));  // refine to 1e-25
  Real hsum(prec);
  for (const auto& r : roots) {
    const Rat rho = refine_root(r, tol_rat);
    const Rat mu_inv = rho / (rho - 1);  // 1/lambda(gamma0 tau) = rho/(rho-1)
    hsum = hsum + Real::of(Rat(r.multiplicity) * mu_inv, prec);
  }
  rep.lhs_r = Real::of(sigma, prec);
  rep.rhs_r = hsum + Real::of(static_cast<long>(cusp), prec);
  rep.pass = abs(rep.lhs_r - rep.rhs_r) < rep.tolerance;
  std::ostringstream note;
  note << "H-only sum " << hsum.str(25) << ", cusp term " << cusp;
  rep.note = note.str();
  return rep;
}

IdentityReport verify_thm_even(int k, int sign, long trunc) {
  if (k < 1) throw std::invalid_argument("weight 0 excluded");
  trunc = auto_trunc(k, trunc);
  IdentityReport rep;
  rep.identity = sign > 0 ? IdentityKind::thm_even_plus : IdentityKind::thm_even_minus;
  rep.k = k;
  const Rat sigma = second_coefficient_sum(e_tilde_even(k, sign, trunc), k);
  rep.lhs_q = even_multiplier(k);
  rep.rhs_q = Rat(sign) * Rat(8 * static_cast<long>(k)) - Rat(sign) * Rat(16) * sigma;
  rep.pass = rep.lhs_q == rep.rhs_q;
  return rep;
}

IdentityReport verify_cor_even_sum(int k, long trunc) {
  if (k < 1) throw std::invalid_argument("verify_cor_even_sum: k must be >= 1");
  trunc = auto_trunc(k, trunc);
  IdentityReport rep;
  rep.identity = IdentityKind::cor_even_sum;
  rep.k = k;
  const Rat sp = second_coefficient_sum(e_tilde_even(k, +1, trunc), k);
  const Rat sm = second_coefficient_sum(e_tilde_even(k, -1, trunc), k);
  rep.lhs_q = Rat(k);
  rep.rhs_q = sp + sm;
  rep.pass = rep.lhs_q == rep.rhs_q;
  rep.note = "Sigma+ = " + rat_str(sp) + ", Sigma- = " + rat_str(sm);
  return rep;
}

BetaValue beta_L_fixed(int k, int precision_bits, long terms, int rounds) {
  const mpfr_prec_t prec = precision_bits + 64;  // working headroom
  const long s = 2 * static_cast<long>(k) + 1;
  if (terms < 4) terms = 4;
  if (rounds >= terms) rounds = static_cast<int>(terms - 2);

  // Partial sums of sum (-1)^n (2n+1)^{-s}.
  std::vector<Real> row;
  row.reserve(static_cast<size_t>(terms));
  Real acc(prec);
  for (long n = 0; n < terms; ++n) {
    Real t = pow_si(Real::of(2 * n + 1, prec), -s);
    if (n % 2 == 1) t = -t;
    acc = acc + t;
    row.push_back(acc);
  }
  // Iterated pair averaging.  The term sequence is totally monotone, so each
  // averaged row is again an alternating enclosure of the limit and the final
  // bracket width bounds the error.
  int used = 0;
  const Real half = Real::of(Rat(1, 2), prec);
  for (int r = 0; r < rounds && row.size() >= 2; ++r) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = (row[i] + row[i + 1]) * half;
    row.pop_back();
    ++used;
  }
  BetaValue out{row.back(), Real(prec), terms, used};
  if (row.size() >= 2) out.error_bound = abs(row[row.size() - 1] - row[row.size() - 2]);
  return out;
}

BetaValue beta_L(int k, int precision_bits) {
  if (k < 0) throw std::invalid_argument("beta_L: k must be >= 0");
  const Real target = Real::pow2(-precision_bits, precision_bits + 64);
  long terms = 64;
  const long cap = 1L << 14;
  while (true) {
    BetaValue v = beta_L_fixed(k, precision_bits, terms, static_cast<int>(terms) - 2);
    if (v.error_bound < target) return v;
    if (terms >= cap)
      throw std::runtime_error(
          "beta_L: accuracy target not reached within the iteration cap; raise the cap or use a "
          "larger acceleration depth");
    terms *= 2;
  }
}

IdentityReport verify_c_consistency(int k, int precision_bits, double tolerance) {
  if (k < 1) throw std::invalid_argument("verify_c_consistency: k must be >= 1");
  const mpfr_prec_t prec = precision_bits + 64;
  IdentityReport rep;
  rep.identity = IdentityKind::c_consistency;
  rep.k = k;
  rep.exact_mode = false;
  rep.tolerance = tolerance > 0 ? Real::of(tolerance, prec)
                                : Real::pow2(-(precision_bits / 2), prec);
  BetaValue beta = beta_L(k, precision_bits);
  rep.lhs_r = beta.value;
  // e_{2k} (pi/2)^{2k+1} / (2 (2k)!)
  const Real pi_half = Real::pi(prec) * Real::of(Rat(1, 2), prec);
  const Rat factor = Rat(euler_numbers(k).back()) / (Rat(2) * Rat(factorial(2 * static_cast<unsigned long>(k))));
  rep.rhs_r = Real::of(factor, prec) * pow_si(pi_half, 2 * static_cast<long>(k) + 1);
  rep.pass = abs(rep.lhs_r - rep.rhs_r) < rep.tolerance;
  return rep;
}

std::vector<IdentityReport> verify_thm_zeros_range(int k_max, long trunc) {
  trunc = auto_trunc(k_max, trunc);
  const auto tildes = e_tilde_odd_table(k_max, trunc);
  const auto eulers = euler_numbers(k_max);
  std::vector<IdentityReport> out;
  for (int k = 0; k <= k_max; ++k) {
    IdentityReport rep;
    rep.identity = IdentityKind::thm_zeros;
    rep.k = k;
    const Rat sigma = second_coefficient_sum(tildes[static_cast<size_t>(k)], k);
    rep.lhs_q = Rat((k % 2 == 0) ? 4 : -4) / Rat(eulers[static_cast<size_t>(k)]);
    rep.rhs_q = Rat(4 * (2 * static_cast<long>(k) + 1)) - Rat(16) * sigma;
    rep.pass = rep.lhs_q == rep.rhs_q;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<IdentityReport> verify_thm_even_range(int k_max, int sign, long trunc) {
  trunc = auto_trunc(k_max, trunc);
  const auto tildes = e_tilde_even_table(k_max, sign, trunc);
  std::vector<IdentityReport> out;
  for (int k = 1; k <= k_max; ++k) {
    IdentityReport rep;
    rep.identity = sign > 0 ? IdentityKind::thm_even_plus : IdentityKind::thm_even_minus;
    rep.k = k;
    const Rat sigma = second_coefficient_sum(tildes[static_cast<size_t>(k - 1)], k);
    rep.lhs_q = even_multiplier(k);
    rep.rhs_q = Rat(sign) * Rat(8 * static_cast<long>(k)) - Rat(sign) * Rat(16) * sigma;
    rep.pass = rep.lhs_q == rep.rhs_q;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<IdentityReport> verify_cor_even_sum_range(int k_max, long trunc) {
  trunc = auto_trunc(k_max, trunc);
  const auto plus = e_tilde_even_table(k_max, +1, trunc);
  const auto minus = e_tilde_even_table(k_max, -1, trunc);
  std::vector<IdentityReport> out;
  for (int k = 1; k <= k_max; ++k) {
    IdentityReport rep;
    rep.identity = IdentityKind::cor_even_sum;
    rep.k = k;
    const Rat sp = second_coefficient_sum(plus[static_cast<size_t>(k - 1)], k);
    const Rat sm = second_coefficient_sum(minus[static_cast<size_t>(k - 1)], k);
    rep.lhs_q = Rat(k);
    rep.rhs_q = sp + sm;
    rep.pass = rep.lhs_q == rep.rhs_q;
    rep.note = "Sigma+ = " + rat_str(sp) + ", Sigma- = " + rat_str(sm);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace gamma2
