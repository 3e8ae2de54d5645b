#include "num/algebraic.hpp"

#include <stdexcept>

namespace btg::num {

AlgebraicReal AlgebraicReal::from_dyadic(const Dyadic& d) {
  AlgebraicReal a;
  // x - d, scaled to integer coefficients
  auto w = std::make_shared<PolyZ>();
  Int shift(1);
  long e = d.exp;
  if (e < 0) {
    mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), -e);
    w->c = {-d.man, shift};
  } else {
    Int m = d.man;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), e);
    w->c = {-m, Int(1)};
  }
  a.w_ = std::move(w);
  a.iv_ = DInterval::point(d);
  a.exact_ = true;
  return a;
}

void AlgebraicReal::refine_step() const {
  if (exact_) return;
  Dyadic m = iv_.mid();
  int sm = sign_at(*w_, m);
  if (sm == 0) {
    iv_ = DInterval(m, m);
    exact_ = true;
    return;
  }
  if (sm == sign_at(*w_, iv_.lo))
    iv_.lo = m;
  else
    iv_.hi = m;
}

void AlgebraicReal::refine_to(long prec) const {
  Dyadic target(Int(1), -prec);
  while (!exact_ && target < iv_.width()) refine_step();
}

int AlgebraicReal::sign_of(const PolyZ& V) const {
  if (V.is_zero()) return 0;
  if (exact_) return sign_at(V, iv_.lo);
  for (int round = 0;; ++round) {
    auto s = eval_interval(V, iv_).sign();
    if (s) return *s;
    if (round == 1) {
      // value may be exactly zero; decide once via gcd
      PolyZ g = gcd_poly(*w_, V);
      if (g.degree() > 0 &&
          sign_at(g, iv_.lo) * sign_at(g, iv_.hi) < 0)
        return 0;
      // nonzero: refinement below must eventually separate from 0
    }
    for (int k = 0; k < 16 && !exact_; ++k) refine_step();
    if (exact_) return sign_at(V, iv_.lo);
    if (round > 600) throw std::runtime_error("sign_of failed to converge");
  }
}

int AlgebraicReal::cmp_rat(const Rat& q) const {
  // sign of (x - q) at the root, cleared: den*x - num
  PolyZ v;
  v.c = {-q.get_num(), q.get_den()};
  return sign_of(v);
}

}  // namespace btg::num
