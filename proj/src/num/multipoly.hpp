#pragma once

#include <map>
#include <string>
#include <vector>

#include "num/dyadic.hpp"
#include "num/poly.hpp"
#include "num/polyz.hpp"
#include "num/rational.hpp"

namespace btg::num {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// The zero polynomial is arity-agnostic (empty term map) so it can serve as
// the additive identity inside generic code.
class MultiPoly {
 public:
  using Mono = std::vector<unsigned>;

  MultiPoly() = default;
  explicit MultiPoly(int arity) : arity_(arity) {}
  static MultiPoly constant(int arity, const Rat& v);
  static MultiPoly var(int arity, int idx, unsigned pow = 1);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Mono& m, const Rat& coeff);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly negated() const;
  MultiPoly scaled(const Rat& s) const;
  MultiPoly pow(unsigned e) const;

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  MultiPoly coeff_of(int var, unsigned k) const;
  MultiPoly derivative(int var) const;

  Rat eval(const std::vector<Rat>& pt) const;
  DInterval eval_interval(const std::vector<DInterval>& pt, long prec) const;

  // var_i -> images[i]; images share a common arity
  MultiPoly subst(const std::vector<MultiPoly>& images) const;

  DensePoly<MultiPoly> as_univariate(int var) const;
  static MultiPoly from_univariate(const DensePoly<MultiPoly>& p, int var,
                                   int arity);

  // Collapse to a univariate polynomial in the given variable; every term
  // must involve only that variable.
  PolyQ to_unipoly(int var) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int arity_ = 0;
  std::map<Mono, Rat> terms_;
};

inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

enum class Sign { negative = -1, zero = 0, positive = 1, unknown = 2 };

// Certified sign at a point with interval coordinates: definite when the
// exact interval evaluation excludes zero, `unknown` when it straddles.
Sign sign_at_point(const MultiPoly& p, const std::vector<DInterval>& pt);
// Exact sign at a rational point.
Sign sign_at_point(const MultiPoly& p, const std::vector<Rat>& pt);

// Sylvester resultant eliminating the given variable.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

}  // namespace btg::num
