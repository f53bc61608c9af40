#include "gamma2/lambda_poly.hpp"

#include <stdexcept>
#include <string>

namespace gamma2 {

namespace {

// Powers of the basis series, grown lazily and shared across extractions.
class BasisPowers {
 public:
  BasisPowers(const LambdaSeries& lam, Basis basis)
      : b_(basis == Basis::lambda ? lam.series : lam.series.invert()) {
    if (b_.is_zero_on_window() || b_.min_exp() == 0)
      throw std::invalid_argument("to_lambda_polynomial: degenerate basis series");
    pows_.push_back(QSeries::one());
  }

  long lead() const { return b_.min_exp(); }

  const QSeries& pow(int i) {
    while (static_cast<int>(pows_.size()) <= i) pows_.push_back(pows_.back() * b_);
    return pows_[static_cast<size_t>(i)];
  }

 private:
  QSeries b_;
  std::vector<QSeries> pows_;
};

LambdaPolynomialResult extract(const QSeries& f, Basis basis, int max_deg, BasisPowers& pows) {
  if (max_deg < 0) throw std::invalid_argument("to_lambda_polynomial: max_deg must be >= 0");
  const long lead_b = pows.lead();  // 4 grid units for lambda itself, 8 after z -> 2z
  const long step = lead_b > 0 ? lead_b : -lead_b;
  // One basis power is `step` grid units of resolution; require headroom
  // beyond the leading exponent so the residual window is nonempty.
  const long needed = f.min_exp() + step * max_deg + 2 * step;
  if (f.trunc() < needed)
    throw std::runtime_error("to_lambda_polynomial: insufficient truncation (have " +
                             std::to_string(f.trunc()) + ", need >= " + std::to_string(needed) +
                             ")");
  for (int i = 0; i <= max_deg; ++i)
    if (pows.pow(i).trunc() < f.trunc())
      throw std::runtime_error(
          "to_lambda_polynomial: basis series truncation too small (need the basis known to " +
          std::to_string(f.trunc() + step * max_deg + 2 * step) + " grid units)");

  std::vector<Rat> coeffs(static_cast<size_t>(max_deg) + 1, Rat(0));
  QSeries rem = f;
  while (!rem.is_zero_on_window()) {
    const long e = rem.min_exp();
    if (lead_b > 0 && (e < 0 || e % lead_b != 0)) break;   // not matchable
    if (lead_b < 0 && (e > 0 || (-e) % step != 0)) break;  // not matchable
    const long i = e / lead_b;
    if (i > max_deg) break;  // would need a higher power; leftover counts as residual
    const QSeries& p = pows.pow(static_cast<int>(i));
    const Rat c = rem.coeff(e) / p.coeff(e);
    coeffs[static_cast<size_t>(i)] = c;
    rem = rem - c * p;
  }

  LambdaPolynomialResult out;
  out.basis = basis;
  out.poly = Polynomial(std::move(coeffs));
  out.residual_ok = rem.is_zero_on_window();
  out.trunc_used = rem.trunc();
  return out;
}

Polynomial extract_checked(const QSeries& f, Basis basis, int deg, BasisPowers& pows,
                           const char* what) {
  LambdaPolynomialResult r = extract(f, basis, deg, pows);
  if (!r.residual_ok)
    throw std::runtime_error(std::string(what) +
                             ": residual check failed, not a polynomial of stated degree");
  return r.poly;
}

}  // namespace

LambdaPolynomialResult to_lambda_polynomial(const QSeries& f, Basis basis, int max_deg,
                                            const LambdaSeries& lam) {
  BasisPowers pows(lam, basis);
  return extract(f, basis, max_deg, pows);
}

Polynomial p_poly_oracle(int k, long trunc) {
  if (k < 1) throw std::invalid_argument("p_poly_oracle: k must be >= 1");
  return p_poly_oracle_table(k, trunc).back();
}

Polynomial e_tilde_odd(int k, long trunc) {
  if (k < 0) throw std::invalid_argument("e_tilde_odd: k must be >= 0");
  return e_tilde_odd_table(k, trunc).back();
}

Polynomial e_tilde_even(int k, int sign, long trunc, EvenReading reading) {
  if (k < 1) throw std::invalid_argument("weight 0 excluded");
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  BasisPowers pows(lam, Basis::inv_lambda);
  const QSeries num = eisenstein_even(k, sign, trunc, reading).data.series;
  const QSeries f = num * tb.theta2.pow(4 * static_cast<unsigned>(k)).invert();
  return extract_checked(f, Basis::inv_lambda, k, pows, "e_tilde_even");
}

std::vector<Polynomial> p_poly_oracle_table(int k_max, long trunc) {
  if (k_max < 1) throw std::invalid_argument("p_poly_oracle_table: k_max must be >= 1");
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  BasisPowers pows(lam, Basis::lambda);
  const QSeries inv_t3_4 = tb.theta3.pow(4).invert();
  std::vector<Polynomial> out;
  QSeries inv_pow = tb.theta2.pow(2).invert();  // 1 / (theta3^{4k} theta2^2), k running
  for (int k = 1; k <= k_max; ++k) {
    inv_pow = inv_pow * inv_t3_4;
    const QSeries f = Rat(4) * (g_normalized(k, trunc).data.series * inv_pow);
    out.push_back(extract_checked(f, Basis::lambda, k - 1, pows, "p_poly_oracle"));
  }
  return out;
}

std::vector<Polynomial> e_tilde_odd_table(int k_max, long trunc) {
  if (k_max < 0) throw std::invalid_argument("e_tilde_odd_table: k_max must be >= 0");
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  BasisPowers pows(lam, Basis::inv_lambda);
  const QSeries inv_t2_4 = tb.theta2.pow(4).invert();
  std::vector<Polynomial> out;
  QSeries inv_pow = tb.theta3.pow(2).invert();
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) inv_pow = inv_pow * inv_t2_4;
    const QSeries f = eisenstein_odd(k, trunc).data.series * inv_pow;
    out.push_back(extract_checked(f, Basis::inv_lambda, k, pows, "e_tilde_odd"));
  }
  return out;
}

std::vector<Polynomial> e_tilde_even_table(int k_max, int sign, long trunc) {
  if (k_max < 1) throw std::invalid_argument("e_tilde_even_table: k_max must be >= 1");
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  BasisPowers pows(lam, Basis::inv_lambda);
  const QSeries inv_t2_4 = tb.theta2.pow(4).invert();
  std::vector<Polynomial> out;
  QSeries inv_pow = QSeries::one();
  for (int k = 1; k <= k_max; ++k) {
    inv_pow = inv_pow * inv_t2_4;
    const QSeries f = eisenstein_even(k, sign, trunc).data.series * inv_pow;
    out.push_back(extract_checked(f, Basis::inv_lambda, k, pows, "e_tilde_even"));
  }
  return out;
}

}  // namespace gamma2
