#include "gamma2/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gamma2 {

void QSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    base_ += static_cast<long>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) base_ = trunc_;
  if (base_ + static_cast<long>(c_.size()) > trunc_)
    throw std::logic_error("qseries: stored coefficients exceed truncation");
}

QSeries QSeries::zero(long trunc) { return QSeries(trunc, trunc, {}); }

QSeries QSeries::constant(const Rat& a, long trunc) { return monomial(a, 0, trunc); }

QSeries QSeries::monomial(const Rat& a, long n, long trunc) {
  if (n >= trunc) throw std::invalid_argument("qseries: monomial exponent beyond truncation");
  if (a == 0) return zero(trunc);
  return QSeries(n, trunc, {a});
}

QSeries QSeries::from_terms(std::vector<std::pair<long, Rat>> terms, long trunc) {
  long lo = trunc;
  for (const auto& [n, v] : terms)
    if (v != 0) lo = std::min(lo, n);
  if (lo == trunc) return zero(trunc);
  std::vector<Rat> c(static_cast<size_t>(trunc - lo), Rat(0));
  for (auto& [n, v] : terms) {
    if (v == 0) continue;
    if (n >= trunc) continue;  // beyond the window, discard
    c[static_cast<size_t>(n - lo)] += v;
  }
  return QSeries(lo, trunc, std::move(c));
}

Rat QSeries::coeff(long n) const {
  if (n >= trunc_)
    throw std::out_of_range("qseries: coefficient read past truncation (n=" + std::to_string(n) +
                            ", trunc=" + std::to_string(trunc_) + ")");
  if (n < base_) return Rat(0);
  size_t i = static_cast<size_t>(n - base_);
  if (i >= c_.size()) return Rat(0);
  return c_[i];
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long t = std::min(a.trunc_, b.trunc_);
  long lo = std::min(std::min(a.base_, b.base_), t);
  // entries above both supports are zero; never allocate out to a huge trunc
  long hi = lo;
  if (!a.c_.empty()) hi = std::max(hi, a.base_ + static_cast<long>(a.c_.size()));
  if (!b.c_.empty()) hi = std::max(hi, b.base_ + static_cast<long>(b.c_.size()));
  std::vector<Rat> c(static_cast<size_t>(std::min(t, hi) - lo), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    long n = a.base_ + static_cast<long>(i);
    if (n < t) c[static_cast<size_t>(n - lo)] += a.c_[i];
  }
  for (size_t i = 0; i < b.c_.size(); ++i) {
    long n = b.base_ + static_cast<long>(i);
    if (n < t) c[static_cast<size_t>(n - lo)] += b.c_[i];
  }
  return QSeries(lo, t, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Tightest valid truncation: a coefficient of the product at exponent n is
  // fully determined iff every split n = i + j with i, j above the operand
  // floors has both factors known.
  long t = std::min(a.trunc_ + b.base_, b.trunc_ + a.base_);
  long lo = a.base_ + b.base_;
  if (a.c_.empty() || b.c_.empty()) return QSeries::zero(std::min(t, QSeries::kExactTrunc));
  if (t <= lo) throw std::runtime_error("qseries: empty precision window in product");
  const long support = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
  std::vector<Rat> c(static_cast<size_t>(std::min(t - lo, support)), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    long na = a.base_ + static_cast<long>(i);
    long jmax = std::min<long>(static_cast<long>(b.c_.size()), t - na - b.base_);
    for (long j = 0; j < jmax; ++j) {
      if (b.c_[static_cast<size_t>(j)] == 0) continue;
      c[static_cast<size_t>(na + b.base_ + j - lo)] += a.c_[i] * b.c_[static_cast<size_t>(j)];
    }
  }
  return QSeries(lo, t, std::move(c));
}

QSeries operator*(const Rat& s, const QSeries& a) {
  if (s == 0) return QSeries::zero(a.trunc());
  QSeries r = a;
  for (auto& v : r.c_) v *= s;
  return r;
}

QSeries QSeries::invert() const {
  if (c_.empty()) throw std::domain_error("qseries: invert of series with zero leading coefficient");
  long m = base_;
  const Rat& lead = c_[0];
  long t = trunc_ - 2 * m;  // x_j needs b known at j + 2m
  if (t - (-m) > (1L << 22))
    throw std::invalid_argument(
        "qseries: invert of an exactly-known series; pick a truncation with truncate_to first");
  std::vector<Rat> x(static_cast<size_t>(t - (-m)), Rat(0));
  x[0] = Rat(1) / lead;
  for (long j = -m + 1; j < t; ++j) {
    Rat s(0);
    long imax = j;  // sum over -m <= i < j
    for (long i = -m; i < imax; ++i) {
      if (x[static_cast<size_t>(i + m)] == 0) continue;
      long bn = j + m - i;  // exponent of the partner coefficient in *this
      if (bn >= trunc_) throw std::logic_error("qseries: invert read past truncation");
      Rat bv = coeff(bn);
      if (bv != 0) s += x[static_cast<size_t>(i + m)] * bv;
    }
    x[static_cast<size_t>(j + m)] = -s / lead;
  }
  return QSeries(-m, t, std::move(x));
}

QSeries QSeries::pow(unsigned e) const {
  if (e == 0) return one();
  QSeries r = *this;
  // left-to-right square and multiply
  unsigned hi = 1u;
  while ((hi << 1u) && (hi << 1u) <= e) hi <<= 1u;
  for (unsigned bit = hi >> 1u; bit; bit >>= 1u) {
    r = r * r;
    if (e & bit) r = r * *this;
  }
  return r;
}

QSeries QSeries::substitute_q_power(int m) const {
  if (m < 1) throw std::invalid_argument("qseries: substitute_q_power requires m >= 1");
  if (m == 1) return *this;
  long t = m * (trunc_ - 1) + 1;
  std::vector<std::pair<long, Rat>> terms;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace_back(m * (base_ + static_cast<long>(i)), c_[i]);
  return from_terms(std::move(terms), t);
}

QSeries QSeries::truncate_to(long new_trunc) const {
  if (new_trunc > trunc_) throw std::invalid_argument("qseries: cannot extend truncation");
  std::vector<Rat> c;
  for (size_t i = 0; i < c_.size(); ++i) {
    long n = base_ + static_cast<long>(i);
    if (n < new_trunc) c.push_back(c_[i]);
  }
  long base = c.empty() ? new_trunc : base_;
  return QSeries(base, new_trunc, std::move(c));
}

std::vector<std::pair<long, Rat>> QSeries::nonzero_terms() const {
  std::vector<std::pair<long, Rat>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(base_ + static_cast<long>(i), c_[i]);
  return out;
}

std::string QSeries::str(size_t max_terms) const {
  std::ostringstream os;
  auto terms = nonzero_terms();
  if (terms.empty()) os << "0";
  for (size_t i = 0; i < terms.size() && i < max_terms; ++i) {
    if (i) os << " + ";
    os << rat_str(terms[i].second) << "*q^(" << terms[i].first << "/8)";
  }
  if (terms.size() > max_terms) os << " + ...";
  os << " + O(q^(" << trunc_ << "/8))";
  return os.str();
}

bool agree_on_window(const QSeries& a, const QSeries& b) {
  QSeries d = a - b;
  return d.is_zero_on_window();
}

}  // namespace gamma2
