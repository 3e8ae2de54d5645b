#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "num/multipoly.hpp"

namespace btg::geom {

using num::DInterval;
using num::Int;
using num::MultiPoly;
using num::PolyQ;
using num::Rat;

// Degree-4 monomial exponents (i,j,k), i+j+k = 4, in descending graded-lex
// order. This fixes the coefficient serialization everywhere.
const std::array<std::array<unsigned, 3>, 15>& quartic_monomials();
int quartic_monomial_index(unsigned i, unsigned j, unsigned k);

// Ternary quartic form with exact rational coefficients.
class Quartic {
 public:
  Quartic() { coeffs_.fill(Rat(0)); }
  explicit Quartic(std::array<Rat, 15> coeffs);
  static Quartic from_multipoly(const MultiPoly& p);

  const std::array<Rat, 15>& coeffs() const { return coeffs_; }
  const Rat& coeff(unsigned i, unsigned j, unsigned k) const {
    return coeffs_[quartic_monomial_index(i, j, k)];
  }
  bool is_zero() const;

  MultiPoly poly() const;
  std::array<MultiPoly, 3> gradient() const;
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

  // content-free integer form with a canonical overall sign
  Quartic normalized() const;
  std::string hash() const;

  friend bool operator==(const Quartic& a, const Quartic& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::array<Rat, 15> coeffs_;
};

// A line in the dual plane: [l1, l2, l3], first nonzero entry scaled to 1.
struct ProjLine {
  std::array<Rat, 3> l;

  ProjLine(Rat a, Rat b, Rat c);
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
    return l[0] * x + l[1] * y + l[2] * z;
  }
  MultiPoly form() const;  // arity 3 linear form
  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.l == b.l;
  }
};

// Invertible 3x3 rational matrix acting on points as y -> m y.
struct ProjectiveMap {
  std::array<std::array<Rat, 3>, 3> m;

  explicit ProjectiveMap(std::array<std::array<Rat, 3>, 3> rows);
  static ProjectiveMap identity();
  Rat det() const;
  ProjectiveMap inverse() const;
  ProjectiveMap compose(const ProjectiveMap& rhs) const;  // this ∘ rhs
  std::array<Rat, 3> apply(const std::array<Rat, 3>& p) const;
};

// f ∘ g (coordinate substitution y -> g y)
Quartic substitute(const Quartic& f, const ProjectiveMap& g);
// group action: apply_map(f, g) = f ∘ g^{-1}, so V(apply_map(f,g)) = g V(f)
Quartic apply_map(const Quartic& f, const ProjectiveMap& g);
// pushforward of a line under the same action: l ∘ g^{-1}
ProjLine map_line(const ProjLine& l, const ProjectiveMap& g);
// pullback of a line into the substituted coordinates: l ∘ g
ProjLine pull_line(const ProjLine& l, const ProjectiveMap& g);

// Restriction of f to L parametrized by two rational points spanning L.
struct BinaryQuartic {
  std::array<Rat, 5> c;  // c[k] = coefficient of s^k t^(4-k)
  int pivot;             // coordinate eliminated by the chart choice
  std::array<std::array<Rat, 3>, 2> basis;  // z(s,t) = s*basis[0] + t*basis[1]
  bool is_zero() const;
  PolyQ dehom() const;  // polynomial in s at t = 1
};

BinaryQuartic restrict_to_line(const Quartic& f, const ProjLine& L);

// Number of distinct real points of V(f) ∩ L. Throws if L ⊂ V(f).
int real_points_on_line(const Quartic& f, const ProjLine& L);

// Exact smoothness certificate. seed drives the coordinate-change retries.
bool is_smooth(const Quartic& f, std::uint64_t seed = 0);

// Distinct real flexes (real points of V(f) ∩ V(Hess f)). Pre: f smooth.
int real_flex_count(const Quartic& f, std::uint64_t seed = 0);

ProjectiveMap random_map(std::mt19937_64& rng);

}  // namespace btg::geom
