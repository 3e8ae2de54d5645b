#pragma once

#include <memory>

#include "num/polyz.hpp"

namespace btg::num {

// A real root of a squarefree integer polynomial, held as the polynomial
// plus an isolating interval. The interval is a refinement cache: methods
// are logically const but sharpen it in place, so a single instance is not
// safe for concurrent use (copy per thread instead).
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(std::shared_ptr<const PolyZ> w, const IsolatedRoot& r)
      : w_(std::move(w)), iv_(r.iv), exact_(r.exact) {}

  static AlgebraicReal from_dyadic(const Dyadic& d);

  const DInterval& interval() const { return iv_; }
  bool is_exact() const { return exact_; }
  const PolyZ& defining_poly() const { return *w_; }

  // Bisect until width <= 2^-prec.
  void refine_to(long prec) const;
  // One bisection step (no-op when exact).
  void refine_step() const;

  // Exact sign of V at this root. Always terminates: zero is detected via
  // gcd with the defining polynomial, nonzero by interval refinement.
  int sign_of(const PolyZ& V) const;
  int sign_of(const PolyQ& V) const { return sign_of(to_primitive_int(V)); }

  // Exact comparison against a rational.
  int cmp_rat(const Rat& q) const;

 private:
  std::shared_ptr<const PolyZ> w_;
  mutable DInterval iv_;
  mutable bool exact_ = false;
};

}  // namespace btg::num
