#include <doctest.h>

#include "gamma2/identities.hpp"
#include "gamma2/sequences.hpp"

using namespace gamma2;

TEST_CASE("odd-weight multiplier identity, exact") {
  const Rat expected_lhs[] = {Rat(4),       Rat(-4),        Rat(4, 5),
                              Rat(-4, 61),  Rat(4, 1385),   Rat(-4, 50521)};
  for (int k = 0; k <= 5; ++k) {
    const IdentityReport r = verify_thm_zeros(k, 128);
    CHECK(r.pass);
    CHECK(r.exact_mode);
    CHECK(r.lhs_q == expected_lhs[k]);
    CHECK(r.lhs_q == r.rhs_q);
  }
  const auto range = verify_thm_zeros_range(8, 160);
  for (const auto& r : range) CHECK(r.pass);
}

TEST_CASE("transported zero sums") {
  for (int k = 1; k <= 4; ++k) {
    const IdentityReport r = verify_cor_32(k, 160, 128);
    CHECK(r.pass);
    CHECK_FALSE(r.exact_mode);
  }
  // k=2: single root -1/4 transports to 1/(mu) = 1/5, cusp adds 1
  const IdentityReport r2 = verify_cor_32(2, 160, 128);
  CHECK(abs(r2.rhs_r - Real::of(Rat(6, 5), 128)).to_double() < 1e-24);
  CHECK(r2.note.find("cusp term 1") != std::string::npos);
}

TEST_CASE("transported sum has an exact rational oracle") {
  // sum of rho/(rho-1) over p-roots is (k-1) - p'(1)/p(1); with the cusp term
  // it must equal the Sigma read off the monic polynomial.
  for (int k = 2; k <= 6; ++k) {
    const Polynomial p = cn_polynomials(k).polys.back();
    const Rat transported = Rat(k - 1) - p.derivative().eval(Rat(1)) / p.eval(Rat(1));
    const IdentityReport r = verify_thm_zeros(k, 8 * k + 64);
    const Rat sigma = (Rat(4 * (2 * k + 1)) - r.rhs_q) / 16;  // recover Sigma from rhs
    CHECK(transported + 1 == sigma);
  }
}

TEST_CASE("even-weight multiplier identity, exact") {
  const Rat expected_m[] = {Rat(-8), Rat(16), Rat(-8), Rat(32, 17)};
  for (int k = 1; k <= 4; ++k) {
    for (int sign : {+1, -1}) {
      const IdentityReport r = verify_thm_even(k, sign, 160);
      CHECK(r.pass);
      CHECK(r.lhs_q == expected_m[k - 1]);
    }
  }
  for (const auto& r : verify_thm_even_range(6, +1, 160)) CHECK(r.pass);
  for (const auto& r : verify_thm_even_range(6, -1, 160)) CHECK(r.pass);
  CHECK_THROWS_WITH_AS(verify_thm_even(0, +1, 128), "weight 0 excluded", std::invalid_argument);
}

TEST_CASE("order sums add up to k") {
  for (int k = 1; k <= 5; ++k) {
    const IdentityReport r = verify_cor_even_sum(k, 160);
    CHECK(r.pass);
    CHECK(r.lhs_q == Rat(k));
  }
  const auto range = verify_cor_even_sum_range(6, 160);
  CHECK(range[0].note == "Sigma+ = 1, Sigma- = 0");
  CHECK(range[1].note == "Sigma+ = 0, Sigma- = 2");
  CHECK(range[2].note == "Sigma+ = 2, Sigma- = 1");
}

TEST_CASE("alternating L-values") {
  const int prec = 128;
  const Real pi = Real::pi(prec + 64);

  SUBCASE("closed forms at small odd arguments") {
    const BetaValue b1 = beta_L(1, prec);
    const Real t1 = pow_si(pi, 3) * Real::of(Rat(1, 32), prec + 64);
    CHECK(abs(b1.value - t1).to_double() < 1e-25);

    const BetaValue b2 = beta_L(2, prec);
    const Real t2 = pow_si(pi, 5) * Real::of(Rat(5, 1536), prec + 64);
    CHECK(abs(b2.value - t2).to_double() < 1e-25);
  }
  SUBCASE("slowly converging s=1 case still reaches pi/4") {
    const BetaValue b0 = beta_L(0, 64);
    CHECK(abs(b0.value - Real::pi(128) * Real::of(Rat(1, 4), 128)).to_double() < 1e-18);
  }
  SUBCASE("reported bound dominates the doubled-iteration difference") {
    for (int k : {0, 2}) {
      const BetaValue v1 = beta_L_fixed(k, prec, 48, 40);
      const BetaValue v2 = beta_L_fixed(k, prec, 96, 80);
      CHECK(abs(v1.value - v2.value) <= v1.error_bound);
    }
  }
}

TEST_CASE("multiplier against the L-value route") {
  for (int k = 1; k <= 3; ++k) {
    const IdentityReport r = verify_c_consistency(k, 128);
    CHECK(r.pass);
  }
  // agreement well beyond the default tolerance at 128 bits
  const IdentityReport r3 = verify_c_consistency(3, 128, 1e-30);
  CHECK(r3.pass);
}
