#include "gamma2/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace gamma2 {

std::vector<Polynomial> sturm_chain(const Polynomial& squarefree) {
  std::vector<Polynomial> chain;
  chain.push_back(squarefree.primitive());
  if (squarefree.degree() >= 1) {
    chain.push_back(squarefree.derivative().primitive());
    while (chain.back().degree() >= 1) {
      Polynomial r = Polynomial::divrem(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;  // non-squarefree input; chain still usable for its squarefree part
      chain.push_back((-r).primitive());
    }
  }
  return chain;
}

int sign_variations_at(const std::vector<Polynomial>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s != 0) {
      if (last != 0 && s != last) ++var;
      last = s;
    }
  }
  return var;
}

namespace {

int sign_at_infinity(const Polynomial& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!plus && (p.degree() % 2 != 0)) s = -s;
  return s;
}

int variations_at_infinity(const std::vector<Polynomial>& chain, bool plus) {
  int var = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, plus);
    if (s != 0) {
      if (last != 0 && s != last) ++var;
      last = s;
    }
  }
  return var;
}

// Power-of-two bound beyond every real root (Cauchy bound rounded up).
Rat root_bound(const Polynomial& p) {
  Rat m(0);
  for (long i = 0; i < p.degree(); ++i) {
    Rat a = abs(p.coeff(i) / p.leading());
    if (a > m) m = a;
  }
  Rat b = m + 1;
  Rat pow(2);
  while (pow < b) pow *= 2;
  return pow;
}

struct Segment {
  Rat a, b;
  int va, vb;
};

}  // namespace

long count_roots_in(const std::vector<Polynomial>& chain, const Rat& a, const Rat& b) {
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

long count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no root set");
  Polynomial sf = p.squarefree_part();
  auto chain = sturm_chain(sf);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<IsolatedRoot> sturm_isolate(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no root set");
  std::vector<IsolatedRoot> out;
  if (p.degree() == 0) return out;

  auto factors = squarefree_decomposition(p);
  Polynomial sf = Polynomial::constant(Rat(1));
  for (const auto& [f, mult] : factors) sf = sf * f;
  if (sf.degree() == 0) return out;  // no nonconstant factor (unreachable for degree >= 1)

  auto chain = sturm_chain(sf);
  Rat bound = root_bound(sf);

  std::vector<Segment> work;
  std::vector<std::pair<Rat, Rat>> isolated;  // lo == hi marks an exact root
  {
    Segment s{-bound, bound, sign_variations_at(chain, -bound), sign_variations_at(chain, bound)};
    if (s.va - s.vb > 0) work.push_back(s);
  }
  while (!work.empty()) {
    Segment s = work.back();  // invariant: roots in the half-open (a, b]
    work.pop_back();
    long n = s.va - s.vb;
    if (n == 0) continue;
    if (n == 1) {
      if (sf.eval(s.b) == 0) {
        // The single counted root is the right endpoint itself.
        isolated.emplace_back(s.b, s.b);
        continue;
      }
      // Ensure the left endpoint is not a root (it can be one counted by the
      // neighboring segment); halve until the sign certificate holds.
      Rat a = s.a, b = s.b;
      while (sf.eval(a) == 0) {
        Rat mid = (a + b) / 2;
        int sm = sgn(sf.eval(mid));
        if (sm == 0) {  // midpoint is the unique root of (a, b]
          a = b = mid;
          break;
        }
        if (count_roots_in(chain, mid, b) == 1)
          a = mid;
        else
          b = mid;
      }
      isolated.emplace_back(a, b);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    int vm = sign_variations_at(chain, mid);
    work.push_back({s.a, mid, s.va, vm});
    work.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  for (auto& [a, b] : isolated) {
    IsolatedRoot r;
    r.poly = p;
    r.lo = a;
    r.hi = b;
    // Find the squarefree factor that owns the root and its multiplicity.
    r.sign_poly = sf;
    r.multiplicity = 1;
    if (factors.size() > 1 || (factors.size() == 1 && factors[0].second != 1)) {
      for (const auto& [f, mult] : factors) {
        bool owns = r.exact() ? (f.eval(r.lo) == 0)
                              : (sgn(f.eval(r.lo)) * sgn(f.eval(r.hi)) < 0);
        if (owns) {
          r.sign_poly = f;
          r.multiplicity = mult;
          break;
        }
      }
    }
    // A linear factor pins its root down exactly.
    if (!r.exact() && r.sign_poly.degree() == 1)
      r.lo = r.hi = -r.sign_poly.coeff(0) / r.sign_poly.coeff(1);
    out.push_back(std::move(r));
  }

  // The half-open segment construction can leave two neighbors sharing an
  // endpoint; shrink until the closed intervals are pairwise disjoint.
  auto narrow_once = [](IsolatedRoot& r) {
    if (r.exact()) return;
    const Rat mid = (r.lo + r.hi) / 2;
    const int sm = sgn(r.sign_poly.eval(mid));
    if (sm == 0) {
      r.lo = r.hi = mid;
      return;
    }
    if (sm == sgn(r.sign_poly.eval(r.lo)))
      r.lo = mid;
    else
      r.hi = mid;
  };
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    for (int guard = 0; guard < 128 && !(out[i].hi < out[i + 1].lo); ++guard) {
      narrow_once(out[i]);
      if (!(out[i].hi < out[i + 1].lo)) narrow_once(out[i + 1]);
      if (out[i].exact() && out[i + 1].exact()) break;
    }
  }
  return out;
}

IsolatedRoot narrow_root(const IsolatedRoot& r, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  IsolatedRoot cur = r;
  if (cur.exact()) return cur;
  int slo = sgn(cur.sign_poly.eval(cur.lo));
  while (cur.hi - cur.lo > tol) {
    Rat mid = (cur.lo + cur.hi) / 2;
    int sm = sgn(cur.sign_poly.eval(mid));
    if (sm == 0) {
      cur.lo = cur.hi = mid;
      return cur;
    }
    if (sm == slo)
      cur.lo = mid;
    else
      cur.hi = mid;
  }
  return cur;
}

Rat refine_root(const IsolatedRoot& r, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  IsolatedRoot cur = narrow_root(r, tol);
  if (cur.exact()) return cur.lo;
  return (cur.lo + cur.hi) / 2;
}

}  // namespace gamma2
