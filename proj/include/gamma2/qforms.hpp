#pragma once

#include <stdexcept>

#include "gamma2/qseries.hpp"
#include "gamma2/real.hpp"

namespace gamma2 {

// q-expansions of the level-2 theta constants at a common truncation:
//   theta2 = q^{1/8} sum q^{n(n+1)/2},  theta3 = sum q^{n^2/2},
//   theta4 = sum (-1)^n q^{n^2/2}.
struct ThetaBundle {
  QSeries theta2, theta3, theta4;
};

ThetaBundle theta_bundle(long trunc);

// lambda = theta2^4 / theta3^4, the hauptmodul; leading term 16 q^{1/2}.
struct LambdaSeries {
  QSeries series;
};

LambdaSeries lambda_series(long trunc);
LambdaSeries lambda_from(const ThetaBundle& tb);

// i^unit_power * scalar * series; keeps series arithmetic rational when a
// series is intrinsically imaginary.
struct ScaledSeries {
  int unit_power = 0;  // mod 4
  Rat scalar = Rat(1);
  QSeries series = QSeries::zero(1);
};

enum class EisKind { odd_chi, g_normalized, even_plus, even_minus };

struct EisensteinSeries {
  EisKind kind;
  int k;
  ScaledSeries data;
};

// Weight 2k+1 series with the quadratic character mod 4:
//   1 + (4(-1)^k/e_{2k}) sum_{r odd} chi(r) r^{2k} q^{r/2}/(1-q^{r/2}).
EisensteinSeries eisenstein_odd(int k, long trunc);

// ghat_{2k+1} = sum_{r>=1} (2r-1)^{2k} q^{(2r-1)/4}/(1+q^{(2r-1)/2}); integer
// coefficients.  The wrapper records the full series as
// i^m * (4/e_{2k}) * ghat with m = -(2k+1) mod 4 (so k=0 gives -i*theta2^2).
EisensteinSeries g_normalized(int k, long trunc);

// Exact rational multiplier of the even-weight series, computed through
// Bernoulli numbers: -4k / ((4^k - 1) B_{2k}).  k=1 gives -8.
Rat even_multiplier(int k);

// Readings of the even-weight expansion.  `resolved` is the one whose
// 1/lambda-polynomial extraction closes with zero residual (the other two are
// the literal sign readings of the ambiguous source; they are kept only so a
// negative test can show the residual check rejects them).
enum class EvenReading { resolved, literal_a, literal_b };

// Weight-2k series (k >= 1) with trivial character: the symmetric (+) and
// antisymmetric (-) combinations of the two cusp sums, constant term 1.
// Coefficient of q^{N/2} under `resolved`:
//   M * ( 4^k sigma_{2k-1}(N/4) - sigma_{2k-1}(N/2) +- oddcof_{2k-1}(N) )
// where oddcof sums d^{2k-1} over divisors d of N with odd cofactor, except
// that weight 2 with sign + takes the regularized series
//   M * (-1)^{N+1} (sigma_1(N) - 4 sigma_1(N/4)),
// the only convergent-in-q completion that is modular (equal to theta4^4).
EisensteinSeries eisenstein_even(int k, int sign, long trunc,
                                 EvenReading reading = EvenReading::resolved);

// Evaluates a q-series at z in the upper half-plane (q^{1/8} = exp(2 pi i z/8))
// in binary floating point of the given precision.  The reported tail bound is
// the geometric estimate max|coeff| * |q^{1/8}|^trunc / (1 - |q^{1/8}|); if it
// exceeds 2^{-precision_bits/2} the evaluation throws with the truncation the
// estimate asks for.
struct NumericValue {
  Complex value;
  Real tail;
};

NumericValue numeric_eval(const QSeries& s, const Complex& z, int precision_bits);

}  // namespace gamma2
