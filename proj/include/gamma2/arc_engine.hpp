#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gamma2/qforms.hpp"
#include "gamma2/rational.hpp"
#include "gamma2/real.hpp"

namespace gamma2 {

// Row-vector action (alpha, beta) * gamma reduced mod 4; gamma must have
// determinant 1.
std::pair<int, int> slash_class(std::pair<int, int> ab, const std::array<std::array<long, 2>, 2>& gamma);

// Congruence-restricted lattice sum over coprime (c,d) in the given residue
// classes mod 4 with c^2 + d^2 <= n_max, summand (c e^{i t/2} + d e^{-i t/2})^{-(2k+1)}.
struct LatticeSumSpec {
  int k = 2;
  std::vector<std::pair<int, int>> classes = default_classes();
  long n_max = 10000;
  int precision_bits = 128;

  static std::vector<std::pair<int, int>> default_classes() {
    return {{0, 3}, {1, 0}, {2, 1}, {3, 2}};
  }
};

// The sum is purely imaginary up to rounding; the real part is kept as a
// cross-check.  A sign is certified when |value_im| clears the truncation
// tail plus the accumulated rounding budget.
struct ArcEvaluation {
  Real theta;
  Real value_im;
  Real value_re_residual;
  Real tail_bound;     // +inf when the tail formula preconditions fail
  Real main_term;      // 2 sin((2k+1) theta / 2)
  Real max_summand;    // largest summand magnitude (1 when the unit terms are present)
  Real rounding_margin;
  long n_terms = 0;

  int certified_sign() const {
    if (abs(value_im) > tail_bound + rounding_margin) return value_im.sgn();
    return 0;
  }
};

enum class EvalMode {
  openmp,            // per-column partials, merged in fixed column order
  serial_reference,  // plain nested loop, kept as the reference for tests
};

ArcEvaluation evaluate_F(const LatticeSumSpec& spec, const Real& theta,
                         EvalMode mode = EvalMode::openmp);

// 5 (1-alpha)^{-k-1/2} n_max^{-k+1} / (k-1): integral bound on the discarded
// terms with c^2+d^2 > n_max, valid for theta with |cos theta| <= alpha.
// Requires k >= 2, n_max >= 100, alpha in (0,1).
Real tail_bound(int k, long n_max, const Real& alpha);

// Constants of the sign-budget analysis.  E1..E3 bound the near-origin terms
// for weights above 51 (E2 evaluated at the reference k = 25 where the
// published constant comes from); e1..e4 and g are the k-dependent refinements
// on [pi/10, 9 pi/10]; h compares the main-term margin against g.
struct ErrorBudget {
  int k = 0;
  double E1 = 0, E2 = 0, E3 = 0;
  double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
  double g_k = 0;
  double h_k = 0;  // NaN for k < 3
  double gamma = 0.1562;
  double alpha = 0.9877;
  double C_cos = 0.952;
};

ErrorBudget error_budget(int k);

struct ScanPoint {
  Real theta;
  Real value_im;
  Real tail_bound;
  int sign = 0;  // 0 = uncertified
  bool certified = false;
};

struct SignChangeInterval {
  Real theta_lo, theta_hi;
  int sign_lo = 0, sign_hi = 0;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  std::vector<SignChangeInterval> intervals;
  std::vector<Real> uncertified;  // grid thetas where no certified sign was found
};

// Evaluates on an inclusive grid of `grid` points over [theta_lo, theta_hi]
// (grid >= 2); uncertified grid points are nudged locally a few times before
// being reported.  Certified opposite signs at consecutive certified points
// become intervals; their count is a lower bound on the zeros inside.
ScanResult scan_arc(const LatticeSumSpec& spec, const Real& theta_lo, const Real& theta_hi,
                    int grid);

struct RsdResult {
  Rat fraction;  // certified sign changes / (k-1)
  long count = 0;
  long total = 0;
  ScanResult scan;
};

// Scan over (pi/20, 19 pi/20); requires 2k+1 > 51.
RsdResult rsd_fraction(const LatticeSumSpec& spec, int grid = 0 /* 0: 4(2k+1)+1 */);

// theta-interval around one zero of the main term, in exact multiples of pi.
struct ClippedInterval {
  int weight = 0;  // 2k-1 or 2k+1
  int j = 0;
  Rat lo_pi, hi_pi;  // in units of pi, after clipping
  bool clipped_lo = false, clipped_hi = false;
  int sign_lo = 0, sign_hi = 0;
  bool cert_lo = false, cert_hi = false;
  bool opposite = false;    // certified opposite endpoint signs
  bool pattern_ok = false;  // matches the (-1)^j endpoint pattern (unclipped ends only)
};

struct InterlaceReport {
  int k = 0;
  Rat half_width_pi;  // 2/((2k+1)(2k-1)), in units of pi
  std::vector<ClippedInterval> lower;  // weight 2k-1 family
  std::vector<ClippedInterval> upper;  // weight 2k+1 family
  bool disjoint = false;
  bool separated = false;
  bool all_certified = false;
};

// Requires k > 15.  Families are centered at the main-term zeros 2 pi j/(2k-+1),
// clipped to [pi/10, 9 pi/10]; disjointness and separation are decided in exact
// rational arithmetic, endpoint signs by certified lattice evaluation.
InterlaceReport interlace_check(int k, long n_max, int precision_bits);

// Bisection on certified signs inside a sign-change interval; stops when the
// width drops below `width_tol` (as a double) or a midpoint cannot be
// certified.  Returns the midpoint of the final bracket.
Real bisect_arc_zero(const LatticeSumSpec& spec, const SignChangeInterval& iv, double width_tol,
                     int max_iter = 80);

// lambda(-1/z_theta) for z_theta = (e^{i theta} - 1)/2: evaluates the lambda
// series at 1 + i cot(theta/2).  The result is real for theta in (0, pi); the
// imaginary part is checked against the evaluation tail.
Real transport_lambda(const Real& theta, const LambdaSeries& lam, int precision_bits);

// Partial sum over class-matching pairs with (|c|,|d|) in {(a,b),(b,a)},
// WITHOUT the coprimality filter: this is how the sign-budget bounds group
// terms (their per-pair displays ignore gcd; harmless for upper bounds since
// the extra terms only enlarge them).  Returns (re, im).
std::pair<Real, Real> pair_partial_sum(int k, int a, int b, const Real& theta,
                                       int precision_bits);

}  // namespace gamma2
