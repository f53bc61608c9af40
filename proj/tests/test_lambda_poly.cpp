#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gamma2/lambda_poly.hpp"
#include "gamma2/roots.hpp"
#include "gamma2/sequences.hpp"

using namespace gamma2;

namespace {

QSeries eval_poly_at_series(const Polynomial& p, const QSeries& s) {
  QSeries acc = QSeries::constant(p.coeff(p.degree()), QSeries::kExactTrunc);
  for (long i = p.degree() - 1; i >= 0; --i)
    acc = acc * s + QSeries::constant(p.coeff(i), QSeries::kExactTrunc);
  return acc;
}

}  // namespace

TEST_CASE("constant series extracts to the constant polynomial") {
  const LambdaSeries lam = lambda_series(96);
  auto r = to_lambda_polynomial(QSeries::constant(Rat(1), 96), Basis::lambda, 0, lam);
  CHECK(r.residual_ok);
  CHECK(r.poly == Polynomial::constant(Rat(1)));
}

TEST_CASE("zero polynomials from the q-series route") {
  CHECK(p_poly_oracle(1, 128) == Polynomial::constant(Rat(1)));
  CHECK(p_poly_oracle(3, 160) == Polynomial({Rat(1), Rat(44), Rat(16)}));
  CHECK(p_poly_oracle(4, 160) == Polynomial({Rat(1), Rat(408), Rat(912), Rat(64)}));
}

TEST_CASE("both zero-polynomial routes agree") {
  const int k_max = 8;
  const auto recursion = cn_polynomials(k_max);
  const auto oracle = p_poly_oracle_table(k_max, 4 * k_max + 96);
  for (int k = 1; k <= k_max; ++k)
    CHECK(oracle[static_cast<size_t>(k - 1)] == recursion.polys[static_cast<size_t>(k)]);
}

TEST_CASE("reconstruction: substituting the lambda series into p reproduces the ratio") {
  const long trunc = 160;
  const int k = 4;
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  const QSeries f = Rat(4) * (g_normalized(k, trunc).data.series *
                              (tb.theta3.pow(4 * k) * tb.theta2.pow(2)).invert());
  const Polynomial p = cn_polynomials(k).polys.back();
  CHECK(agree_on_window(eval_poly_at_series(p, lam.series), f));
}

TEST_CASE("extraction works identically after z -> 2z") {
  const long trunc = 200;
  const int k = 3;
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  const QSeries f = Rat(4) * (g_normalized(k, trunc).data.series *
                              (tb.theta3.pow(4 * k) * tb.theta2.pow(2)).invert());
  const QSeries f2 = f.substitute_q_power(2);
  const LambdaSeries lam2{lam.series.substitute_q_power(2)};
  auto r = to_lambda_polynomial(f2, Basis::lambda, k - 1, lam2);
  CHECK(r.residual_ok);
  CHECK(r.poly == Polynomial({Rat(1), Rat(44), Rat(16)}));
}

TEST_CASE("monic 1/lambda polynomials of the odd series") {
  CHECK(e_tilde_odd(0, 96) == Polynomial::constant(Rat(1)));
  CHECK(e_tilde_odd(1, 96) == Polynomial({Rat(-1), Rat(1)}));
  CHECK(e_tilde_odd(2, 128) == Polynomial({Rat(1, 5), Rat(-6, 5), Rat(1)}));
  for (int k = 3; k <= 6; ++k) {
    const Polynomial e = e_tilde_odd(k, 8 * k + 64);
    CHECK(e.degree() == k);
    CHECK(e.coeff(k) == 1);
  }
}

TEST_CASE("monic 1/lambda polynomials of the even series") {
  CHECK(e_tilde_even(1, +1, 96) == Polynomial({Rat(-1), Rat(1)}));
  CHECK(e_tilde_even(1, -1, 96) == Polynomial({Rat(0), Rat(1)}));
  for (int k = 2; k <= 5; ++k) {
    for (int sign : {+1, -1}) {
      const Polynomial e = e_tilde_even(k, sign, 8 * k + 64);
      CHECK(e.degree() == k);
      CHECK(e.coeff(k) == 1);
    }
  }
}

TEST_CASE("the literal sign readings fail the residual check") {
  CHECK_THROWS_WITH_AS(e_tilde_even(1, +1, 128, EvenReading::literal_a),
                       "e_tilde_even: residual check failed, not a polynomial of stated degree",
                       std::runtime_error);
  CHECK_THROWS_AS(e_tilde_even(1, +1, 128, EvenReading::literal_b), std::runtime_error);
  CHECK_THROWS_AS(e_tilde_even(2, -1, 128, EvenReading::literal_a), std::runtime_error);
  CHECK_THROWS_AS(e_tilde_even(2, -1, 128, EvenReading::literal_b), std::runtime_error);
}

TEST_CASE("a corrupted input series is flagged, not silently accepted") {
  const long trunc = 160;
  const int k = 3;
  const ThetaBundle tb = theta_bundle(trunc);
  const LambdaSeries lam = lambda_from(tb);
  QSeries f = Rat(4) * (g_normalized(k, trunc).data.series *
                        (tb.theta3.pow(4 * k) * tb.theta2.pow(2)).invert());

  SUBCASE("spurious off-grid coefficient") {
    const QSeries bad = f + QSeries::monomial(Rat(1), 34, f.trunc());
    auto r = to_lambda_polynomial(bad, Basis::lambda, k - 1, lam);
    CHECK_FALSE(r.residual_ok);
  }
  SUBCASE("perturbed on-grid coefficient") {
    const QSeries bad = f + QSeries::monomial(Rat(1, 7), 8, f.trunc());
    auto r = to_lambda_polynomial(bad, Basis::lambda, k - 1, lam);
    CHECK_FALSE(r.residual_ok);
  }
  SUBCASE("degree overflow clears the residual flag") {
    auto r = to_lambda_polynomial(f, Basis::lambda, k - 2, lam);
    CHECK_FALSE(r.residual_ok);
  }
}

TEST_CASE("insufficient truncation is reported with the needed amount") {
  const LambdaSeries lam = lambda_series(96);
  const QSeries f = QSeries::constant(Rat(1), 20);
  CHECK_THROWS_AS(to_lambda_polynomial(f, Basis::lambda, 4, lam), std::runtime_error);
}

TEST_CASE("root transport: the extra zero sits at x=1 and the rest map to p-roots") {
  // Observed regularity, not assumed anywhere: (x-1) divides the odd monic
  // polynomial, and the remaining roots are rho/(rho-1) over the p-roots.
  const Rat tol(Int(1), Int("10000000000000000000000"));  // 1e-22
  for (int k = 2; k <= 6; ++k) {
    Polynomial e = e_tilde_odd(k, 8 * k + 64);
    CHECK(e.eval(Rat(1)) == 0);
    const Polynomial q = Polynomial::divrem(e, Polynomial({Rat(-1), Rat(1)})).first;

    auto q_roots = sturm_isolate(q);
    auto p_roots = sturm_isolate(cn_polynomials(k).polys.back());
    REQUIRE(q_roots.size() == p_roots.size());
    std::vector<Rat> lhs, rhs;
    for (const auto& r : q_roots) lhs.push_back(refine_root(r, tol));
    for (const auto& r : p_roots) {
      const Rat rho = refine_root(r, tol);
      rhs.push_back(rho / (rho - 1));
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    const Rat close(Int(1), Int("100000000000000000000"));  // 1e-20
    for (size_t i = 0; i < lhs.size(); ++i) CHECK(abs(lhs[i] - rhs[i]) < close);
  }
}
