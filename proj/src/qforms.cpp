#include "gamma2/qforms.hpp"

#include <cmath>

#include "gamma2/sequences.hpp"

namespace gamma2 {

ThetaBundle theta_bundle(long trunc) {
  if (trunc <= 0) throw std::invalid_argument("theta_bundle: trunc must be positive");
  std::vector<std::pair<long, Rat>> t2, t3, t4;
  // theta2: exponents n(n+1)/2 + 1/8, folded n <-> -n-1.
  for (long n = 0; 4 * n * (n + 1) + 1 < trunc; ++n) t2.emplace_back(4 * n * (n + 1) + 1, Rat(2));
  t3.emplace_back(0, Rat(1));
  t4.emplace_back(0, Rat(1));
  for (long n = 1; 4 * n * n < trunc; ++n) {
    t3.emplace_back(4 * n * n, Rat(2));
    t4.emplace_back(4 * n * n, (n % 2 == 0) ? Rat(2) : Rat(-2));
  }
  return {QSeries::from_terms(std::move(t2), trunc), QSeries::from_terms(std::move(t3), trunc),
          QSeries::from_terms(std::move(t4), trunc)};
}

LambdaSeries lambda_from(const ThetaBundle& tb) {
  return {tb.theta2.pow(4) * tb.theta3.pow(4).invert()};
}

LambdaSeries lambda_series(long trunc) { return lambda_from(theta_bundle(trunc)); }

EisensteinSeries eisenstein_odd(int k, long trunc) {
  if (k < 0) throw std::invalid_argument("eisenstein_odd: k must be >= 0");
  const Rat c = Rat(4 * ((k % 2 == 0) ? 1 : -1)) / Rat(euler_numbers(k).back());
  std::vector<std::pair<long, Rat>> terms;
  terms.emplace_back(0, Rat(1));
  for (long r = 1; 4 * r < trunc; r += 2) {
    const Rat coef = c * ((r % 4 == 1) ? Rat(1) : Rat(-1)) *
                     Rat(int_pow(Int(r), 2 * static_cast<unsigned long>(k)));
    for (long m = 1; 4 * r * m < trunc; ++m) terms.emplace_back(4 * r * m, coef);
  }
  return {EisKind::odd_chi, k, {0, Rat(1), QSeries::from_terms(std::move(terms), trunc)}};
}

EisensteinSeries g_normalized(int k, long trunc) {
  if (k < 0) throw std::invalid_argument("g_normalized: k must be >= 0");
  std::vector<std::pair<long, Rat>> terms;
  for (long r = 1; 2 * (2 * r - 1) < trunc; ++r) {
    const long s = 2 * r - 1;
    const Rat sk = Rat(int_pow(Int(s), 2 * static_cast<unsigned long>(k)));
    for (long m = 0; 2 * s * (2 * m + 1) < trunc; ++m)
      terms.emplace_back(2 * s * (2 * m + 1), (m % 2 == 0) ? sk : -sk);
  }
  const int unit_power = ((-(2 * k + 1)) % 4 + 4) % 4;
  const Rat scalar = Rat(4) / Rat(euler_numbers(k).back());
  return {EisKind::g_normalized, k, {unit_power, scalar, QSeries::from_terms(std::move(terms), trunc)}};
}

Rat even_multiplier(int k) {
  if (k < 1) throw std::invalid_argument("weight 0 excluded");
  const Rat b2k = bernoulli_numbers(2 * k).back();
  return Rat(-4 * static_cast<long>(k)) / (Rat(int_pow(Int(4), static_cast<unsigned long>(k)) - 1) * b2k);
}

namespace {

Int sigma_pow(long n, unsigned long p) {
  Int s(0);
  if (n <= 0) return s;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += int_pow(Int(d), p);
    const long e = n / d;
    if (e != d) s += int_pow(Int(e), p);
  }
  return s;
}

Int oddcof_pow(long n, unsigned long p) {
  Int s(0);
  for (long d = 1; d <= n; ++d)
    if (n % d == 0 && ((n / d) % 2 == 1)) s += int_pow(Int(d), p);
  return s;
}

}  // namespace

EisensteinSeries eisenstein_even(int k, int sign, long trunc, EvenReading reading) {
  if (k < 1) throw std::invalid_argument("weight 0 excluded");
  if (sign != 1 && sign != -1) throw std::invalid_argument("eisenstein_even: sign must be +1/-1");
  const Rat m = even_multiplier(k);
  const unsigned long wm1 = static_cast<unsigned long>(2 * k - 1);
  std::vector<std::pair<long, Rat>> terms;
  terms.emplace_back(0, Rat(1));
  if (reading == EvenReading::resolved) {
    for (long big_n = 1; 4 * big_n < trunc; ++big_n) {
      Rat base = Rat(int_pow(Int(4), static_cast<unsigned long>(k))) *
                     Rat((big_n % 4 == 0) ? sigma_pow(big_n / 4, wm1) : Int(0)) -
                 Rat((big_n % 2 == 0) ? sigma_pow(big_n / 2, wm1) : Int(0)) +
                 Rat(sign) * Rat(oddcof_pow(big_n, wm1));
      if (k == 1 && sign == 1) {
        // Weight 2, symmetric sign: the class sums are only conditionally
        // convergent and the row-by-row completion is not modular; use the
        // regularized series instead (it equals theta4^4).
        base = Rat(((big_n % 2 == 0) ? -1 : 1)) *
               (Rat(sigma_pow(big_n, 1)) -
                Rat(4) * Rat((big_n % 4 == 0) ? sigma_pow(big_n / 4, 1) : Int(0)));
      }
      terms.emplace_back(4 * big_n, m * base);
    }
  } else {
    // Literal readings of the ambiguous display: numerator r^{2k}, denominator
    // 1 + D_r q^{r/2} with D_r = -+ sign * (-1)^r.  Kept only so tests can show
    // the residual check rejects them.
    const int ds = (reading == EvenReading::literal_a) ? -sign : sign;
    for (long r = 1; 4 * r < trunc; ++r) {
      const Rat rk = Rat(int_pow(Int(r), static_cast<unsigned long>(2 * k)));
      const int d_r = ds * ((r % 2 == 0) ? 1 : -1);
      for (long mm = 1; 4 * r * mm < trunc; ++mm) {
        // q^{r/2}/(1 + D q^{r/2}) = sum_m (-D)^{m-1} q^{rm/2}
        const int geo = ((mm - 1) % 2 == 0) ? 1 : -d_r;
        terms.emplace_back(4 * r * mm, Rat(sign * geo) * m * rk);
      }
    }
  }
  return {sign == 1 ? EisKind::even_plus : EisKind::even_minus, k,
          {0, Rat(1), QSeries::from_terms(std::move(terms), trunc)}};
}

NumericValue numeric_eval(const QSeries& s, const Complex& z, int precision_bits) {
  const mpfr_prec_t prec = precision_bits;
  if (!(z.im.sgn() > 0)) throw std::domain_error("numeric_eval: Im(z) must be positive");

  // u = q^{1/8} = exp(2 pi i z / 8)
  const Real pi = Real::pi(prec);
  const Real quarter = Real::of(Rat(1, 4), prec);
  const Real phase = pi * quarter * z.re;            // arg(u)
  const Real mod = exp(-(pi * quarter * z.im));      // |u| < 1
  const Complex u{mod * cos(phase), mod * sin(phase)};

  const auto terms = s.nonzero_terms();
  Complex acc(prec);
  Real cmax(prec);
  if (!terms.empty()) {
    // ascending exponents; advance by repeated multiplication
    long n_cur = terms.front().first;
    auto upow = [&](long e) {
      const bool invert = e < 0;
      const unsigned long ee = static_cast<unsigned long>(invert ? -e : e);
      Complex p = u.pow_ui(ee, prec);
      if (invert) {
        Complex one(prec);
        one.re = Real::of(1L, prec);
        p = one / p;
      }
      return p;
    };
    Complex cur = upow(n_cur);
    for (const auto& [n, coef] : terms) {
      if (n != n_cur) {
        cur = cur * upow(n - n_cur);
        n_cur = n;
      }
      const Real c = Real::of(coef, prec);
      acc = acc + c * cur;
      const Real ac = abs(c);
      if (ac > cmax) cmax = ac;
    }
  }

  // Geometric tail estimate: coefficients at exponents >= trunc are unknown;
  // the estimate assumes they stay below the largest seen magnitude.
  const Real one = Real::of(1L, prec);
  Real tail = cmax * pow_si(mod, s.trunc()) / (one - mod);
  const Real target = Real::pow2(-(precision_bits / 2), prec);
  if (tail > target) {
    // solve |u|^T * cmax / (1-|u|) <= target for T
    const Real need = (log(target) - log(cmax + one) + log(one - mod)) / log(mod);
    throw std::runtime_error(
        "numeric_eval: requested precision unattainable at truncation " +
        std::to_string(s.trunc()) + "; need roughly trunc >= " +
        std::to_string(static_cast<long>(need.to_double()) + 1));
  }
  return {acc, tail};
}

}  // namespace gamma2
