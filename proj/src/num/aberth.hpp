#pragma once

#include <cstdint>
#include <vector>

#include "num/polyz.hpp"

namespace btg::num {

struct ComplexRoot {
  Dyadic re, im;
  int multiplicity = 1;
};

// Rounded dyadic complex arithmetic (enough for root polishing and
// back-substitution at complex roots).
struct DyComplex {
  Dyadic re, im;
};
DyComplex cx_add(const DyComplex& a, const DyComplex& b, long prec);
DyComplex cx_sub(const DyComplex& a, const DyComplex& b, long prec);
DyComplex cx_mul(const DyComplex& a, const DyComplex& b, long prec);
DyComplex cx_div(const DyComplex& a, const DyComplex& b, long prec);
DyComplex cx_poly_eval(const PolyZ& p, const DyComplex& z, long prec);

// Simultaneous (Aberth-Ehrlich) iteration on each squarefree factor, to
// residual |p(z)| < 2^-tol_prec. Deterministic for a fixed seed. Output is
// conjugation-closed for the (real) input and multiplicities sum to deg p.
// Throws on non-convergence at the iteration cap.
std::vector<ComplexRoot> complex_root_clusters(const PolyZ& p, long tol_prec,
                                               std::uint64_t seed,
                                               int iter_cap = 600);

}  // namespace btg::num
