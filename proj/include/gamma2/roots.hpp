#pragma once

#include <vector>

#include "gamma2/polynomial.hpp"

namespace gamma2 {

// A certified real root: `poly` has exactly `multiplicity` equal roots in
// [lo, hi].  `sign_poly` is the squarefree factor carrying the root; it
// changes sign across the interval unless lo == hi is the exact root, which
// is what refinement bisects on.
struct IsolatedRoot {
  Polynomial poly;
  Polynomial sign_poly;
  Rat lo, hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
};

// Sturm chain of a squarefree polynomial (content-normalized remainders).
std::vector<Polynomial> sturm_chain(const Polynomial& squarefree);

// Sign variations of the chain at x.
int sign_variations_at(const std::vector<Polynomial>& chain, const Rat& x);

// Number of distinct real roots in (a, b], exact.
long count_roots_in(const std::vector<Polynomial>& chain, const Rat& a, const Rat& b);

// Total number of distinct real roots.
long count_real_roots(const Polynomial& p);

// Pairwise-disjoint isolating intervals covering every real root, sorted
// ascending, with multiplicities recovered by squarefree decomposition.
// Throws std::domain_error on the zero polynomial.
std::vector<IsolatedRoot> sturm_isolate(const Polynomial& p);

// Bisects until |result - root| <= tol.  Throws on tol <= 0.
Rat refine_root(const IsolatedRoot& r, const Rat& tol);

// Shrinks the isolating interval until its width is <= tol, preserving the
// sign-change certificate.  Returns the narrowed root.
IsolatedRoot narrow_root(const IsolatedRoot& r, const Rat& tol);

}  // namespace gamma2
