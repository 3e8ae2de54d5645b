#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geom/quartic.hpp"
#include "num/algebraic.hpp"
#include "num/multipoly.hpp"

namespace btg::solver {

using geom::ProjectiveMap;
using geom::ProjLine;
using geom::Quartic;
using num::AlgebraicReal;
using num::DInterval;
using num::Dyadic;
using num::MultiPoly;
using num::PolyZ;
using num::Rat;

enum class Reality { real_split, real_non_split, complex_pair };

// A polynomial in (a, b) restricted to the solution curve b = b(a), reduced
// modulo the eliminant. Signs at bitangent roots are exact.
struct CurveValue {
  MultiPoly sym;   // symbolic form in (a, b) for the interval fast path
  PolyZ reduced;   // numerator ≡ sym(a, b(a)) * s11(a)^(deg_b sym)  (mod W)
  int b_parity;    // deg_b sym mod 2
};

// Shared exact data for one solved quartic: the coordinate witness, the
// chart polynomials, the degree-28 eliminant and the back-substitution pair.
struct SolveContext {
  Quartic f_orig;
  Quartic f_mapped;          // f_orig ∘ witness
  ProjectiveMap witness;     // mapped point x corresponds to original A x
  ProjectiveMap witness_inv;

  MultiPoly q[5];            // restriction coefficients q[m] of s^m t^(4-m)
  MultiPoly G1, G2;          // perfect-square conditions in (a, b)
  std::shared_ptr<const PolyZ> W;  // squarefree eliminant, degree 28
  PolyZ s11, s10;            // b(a) = -s10(a)/s11(a)
  PolyZ q4a;                 // q[4] as a univariate in a

  std::array<MultiPoly, 3> tangency_sym;  // 8 q4^2, 4 q4 q3, 4 q4 q2 - q3^2
  MultiPoly disc_sym;                     // 3 q3^2 - 8 q4 q2

  long precision_cap = 4096;  // bound for approximation-only refinement loops

  // lazily built reduction data shared by curve_value calls (single-threaded
  // use per context; copy the context for parallel work)
  struct ModCache {
    num::PolyQ wq;  // W made monic
    num::PolyQ s11m, s10n;
    std::vector<num::PolyQ> p10, p11;
  };
  mutable ModCache mod_cache;

  SolveContext() : witness(ProjectiveMap::identity()), witness_inv(witness) {}

  CurveValue curve_value(const MultiPoly& P) const;
  // Exact sign of a curve value at a real bitangent root. 0 is exact.
  int sign_at(const AlgebraicReal& alpha, const CurveValue& v) const;
  int sign_s11(const AlgebraicReal& alpha) const;
  DInterval b_interval(const AlgebraicReal& alpha, long prec) const;
  // line (1, a, b(a)) · witness^{-1} as intervals in original coordinates
  std::array<DInterval, 3> line_interval(const AlgebraicReal& alpha,
                                         long prec) const;
  // binary cubic grad(f_mapped)(z(s,t)) · w, coefficients in (a, b);
  // returned as the four (s,t)-coefficients, degree 3 down to 0 in s
  std::array<MultiPoly, 4> gradient_form(const std::array<Rat, 3>& w) const;
  // linear form m(z(s,t)) for a mapped line m: (coeff of s, coeff of t)
  std::array<MultiPoly, 2> line_form(const std::array<Rat, 3>& m) const;
};

struct Bitangent {
  Reality reality = Reality::real_split;
  bool hyperflex = false;
  int multiplicity = 1;
  int index = 0;

  // real case
  AlgebraicReal alpha;
  // complex representative case (approximations in the mapped chart)
  Dyadic a_re, a_im, b_re, b_im;

  // dual coordinates in original coordinates (intervals; complex reps store
  // the real part only and are flagged by reality)
  std::array<DInterval, 3> line;
  std::array<bool, 3> line_exact_zero{false, false, false};

  bool is_real() const { return reality != Reality::complex_pair; }
};

struct TangencyPair {
  bool real = true;
  // real: the two tangency points, projective interval coordinates in the
  // original frame (equal for a hyperflex)
  std::array<DInterval, 3> z1, z2;
  // complex: z = re ± i im
  std::array<DInterval, 3> re, im;
};

struct BitangentSet {
  std::string quartic_hash;
  std::shared_ptr<SolveContext> ctx;
  std::vector<Bitangent> list;  // real (sorted by a), then complex reps
  int total_multiplicity = 0;   // 28
  int map_retries = 0;

  int real_count() const;
  int split_count() const;
  int nonsplit_count() const;
  int complex_pairs() const { return (total_multiplicity - real_count()) / 2; }
};

// The two polynomial conditions in (a, b) cutting out the bitangent
// parameters of the chart V(y_chart + a y_j + b y_k); chart selects which
// coordinate carries the unit coefficient.
std::pair<MultiPoly, MultiPoly> square_conditions(const Quartic& f,
                                                  int chart = 0);

// All 28 bitangents with certified classification. Throws on non-smooth
// input or (after the retry budget) on persistent genericity failure.
BitangentSet compute_bitangents(const Quartic& f, std::uint64_t seed,
                                int max_retries = 8);

// Certified tangency points of one bitangent.
TangencyPair tangency_points(const BitangentSet& set, const Bitangent& bt,
                             long prec = 96);

// Exact consistency of the elimination data: the square conditions vanish
// identically on the back-substituted solution curve. Intended for tests
// (the exact rational reduction is not cheap).
bool validate_square_conditions(const BitangentSet& set);

}  // namespace btg::solver
