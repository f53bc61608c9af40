#include <doctest.h>

#include <cmath>

#include "gamma2/report.hpp"
#include "gamma2/roots.hpp"
#include "gamma2/sequences.hpp"

using namespace gamma2;

TEST_CASE("no real roots") {
  CHECK(sturm_isolate(Polynomial({Rat(1), Rat(0), Rat(1)})).empty());
  CHECK(count_real_roots(Polynomial({Rat(1), Rat(0), Rat(1)})) == 0);
}

TEST_CASE("degree one root is exact") {
  auto roots = sturm_isolate(Polynomial({Rat(1), Rat(4)}));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].exact());
  CHECK(roots[0].lo == Rat(-1, 4));
  CHECK(roots[0].multiplicity == 1);
}

TEST_CASE("p7 roots round to the expected decimals") {
  auto roots = sturm_isolate(Polynomial({Rat(1), Rat(44), Rat(16)}));
  REQUIRE(roots.size() == 2);
  const Rat tol(Int(1), Int(100000000));
  CHECK(rat_decimal(refine_root(roots[0], tol), 4) == "-2.7271");
  CHECK(rat_decimal(refine_root(roots[1], tol), 4) == "-0.0229");
}

TEST_CASE("refinement contract") {
  auto roots = sturm_isolate(Polynomial({Rat(1), Rat(4)}));
  const Rat tol(Int(1), Int(1000000));
  const Rat x = refine_root(roots[0], tol);
  CHECK(abs(x - Rat(-1, 4)) <= tol);
  CHECK_THROWS(refine_root(roots[0], Rat(0)));
  CHECK_THROWS(refine_root(roots[0], Rat(-1)));
}

TEST_CASE("refined roots match a floating Newton oracle (p11)") {
  const Polynomial p = cn_polynomials(5).polys[5];
  auto roots = sturm_isolate(p);
  REQUIRE(roots.size() == 4);
  const Rat tol(Int(1), Int("100000000"));  // 1e-8
  for (const auto& r : roots) {
    // Newton from the interval midpoint in double precision.
    double x = (r.lo.get_d() + r.hi.get_d()) / 2;
    for (int it = 0; it < 60; ++it) {
      const double f = p.eval(Rat(x)).get_d();
      const double fp = p.derivative().eval(Rat(x)).get_d();
      if (fp == 0) break;
      const double next = x - f / fp;
      if (std::abs(next - x) < 1e-14 * std::max(1.0, std::abs(x))) {
        x = next;
        break;
      }
      x = next;
    }
    const double refined = refine_root(r, tol).get_d();
    CHECK(std::abs(refined - x) <= 1e-6 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("multiplicities via repeated gcd") {
  // (1+4x)^2 (x^2 - 2)
  const Polynomial p =
      Polynomial({Rat(1), Rat(4)}) * Polynomial({Rat(1), Rat(4)}) * Polynomial({Rat(-2), Rat(0), Rat(1)});
  auto roots = sturm_isolate(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].multiplicity == 1);  // -sqrt(2)
  CHECK(roots[1].multiplicity == 2);  // -1/4
  CHECK(roots[1].exact());
  CHECK(roots[1].lo == Rat(-1, 4));
  CHECK(roots[2].multiplicity == 1);  // +sqrt(2)
}

TEST_CASE("isolating intervals are disjoint and their count is certified") {
  for (int k = 2; k <= 10; ++k) {
    const Polynomial p = cn_polynomials(k).polys[static_cast<size_t>(k)];
    auto roots = sturm_isolate(p);
    CHECK(static_cast<long>(roots.size()) == count_real_roots(p));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
    for (const auto& r : roots) {
      if (!r.exact()) {
        CHECK(sgn(r.sign_poly.eval(r.lo)) * sgn(r.sign_poly.eval(r.hi)) < 0);
      } else {
        CHECK(r.sign_poly.eval(r.lo) == 0);
      }
      // all of these roots are strictly negative; narrow until that is certified
      IsolatedRoot cur = r;
      for (int g = 0; g < 500 && !(cur.hi < 0); ++g)
        cur = narrow_root(cur, (cur.hi - cur.lo) / 2);
      CHECK(cur.hi < 0);
    }
  }
}

TEST_CASE("zero polynomial") {
  CHECK_THROWS_WITH_AS(sturm_isolate(Polynomial()), "zero polynomial has no root set",
                       std::domain_error);
}
