#pragma once

#include <utility>
#include <vector>

#include "num/dyadic.hpp"
#include "num/poly.hpp"

namespace btg::num {

using PolyZ = DensePoly<Int>;
using PolyQ = DensePoly<Rat>;

// Clears denominators and removes integer content; sign of the leading
// coefficient is preserved.
PolyZ to_primitive_int(const PolyQ& p);
PolyQ to_rat_poly(const PolyZ& p);

Int content(const PolyZ& p);
PolyZ primitive_part(const PolyZ& p);
// Full integer gcd (content included), normalized to positive leading
// coefficient.
PolyZ gcd_poly(const PolyZ& a, const PolyZ& b);
PolyZ squarefree_part(const PolyZ& p);
// Yun decomposition: list of (factor, multiplicity), factors squarefree and
// pairwise coprime, product of factor^mult = p up to content.
std::vector<std::pair<PolyZ, int>> squarefree_decomposition(const PolyZ& p);

// Euclidean remainder over Q.
PolyQ poly_mod(const PolyQ& a, const PolyQ& b);

Rat eval_rat(const PolyZ& p, const Rat& x);
Dyadic eval_dyadic(const PolyZ& p, const Dyadic& x);  // exact
DInterval eval_interval(const PolyZ& p, const DInterval& x);  // exact Horner
int sign_at(const PolyZ& p, const Dyadic& x);
int sign_at(const PolyZ& p, const Rat& x);

// k such that every complex root has |z| < 2^k.
long root_bound_exp(const PolyZ& p);

struct IsolatedRoot {
  DInterval iv;       // contains exactly one real root
  bool exact = false; // iv is a point and the root itself
};

// Isolating intervals for all real roots of a squarefree p, sorted
// increasing. Open-interval endpoints are never roots.
std::vector<IsolatedRoot> isolate_real_roots(const PolyZ& p);

// Bisect until width <= 2^-prec. Pre: iv.exact or sign change across iv.
DInterval refine_root(const PolyZ& p, DInterval iv, long prec);

// All real roots of an arbitrary nonzero p with multiplicities from the
// squarefree decomposition; pairwise disjoint intervals of width <= 2^-prec,
// sorted increasing.
std::vector<std::pair<DInterval, int>> isolate_real_roots_mult(const PolyQ& p,
                                                               long prec);

}  // namespace btg::num
