#pragma once

#include <stdexcept>
#include <vector>

#include "num/rational.hpp"

namespace btg::num {

// Exact coefficient division hooks. Each coefficient ring used inside the
// subresultant machinery provides one; division must be exact (throws
// otherwise for polynomial rings, asserts for integers).
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("inexact integer division");
  return q;
}
inline Rat exact_div(const Rat& a, const Rat& b) { return Rat(a / b); }
inline bool ring_is_zero(const Int& a) { return sgn(a) == 0; }
inline bool ring_is_zero(const Rat& a) { return sgn(a) == 0; }

// Dense univariate polynomial over a commutative ring R. Index = degree.
// Invariant: trailing (leading) coefficient nonzero unless the polynomial is
// zero (empty vector).
template <class R>
struct DensePoly {
  std::vector<R> c;

  DensePoly() = default;
  explicit DensePoly(std::vector<R> cs) : c(std::move(cs)) { trim(); }
  static DensePoly constant(R v) {
    DensePoly p;
    if (!ring_is_zero(v)) p.c.push_back(std::move(v));
    return p;
  }

  void trim() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const R& lc() const { return c.back(); }
  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return R();
    return c[k];
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    return a + b.negated();
  }
  DensePoly negated() const {
    DensePoly r = *this;
    for (auto& x : r.c) x = R() - x;
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    DensePoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, R());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  DensePoly scaled(const R& s) const {
    DensePoly r = *this;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
  }
  DensePoly coeff_exact_div(const R& s) const {
    DensePoly r = *this;
    for (auto& x : r.c) x = exact_div(x, s);
    return r;
  }
  DensePoly shifted(int k) const {  // * x^k
    if (is_zero()) return *this;
    DensePoly r;
    r.c.assign(c.size() + k, R());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }
  DensePoly derivative() const {
    DensePoly r;
    for (int i = 1; i <= degree(); ++i) {
      R k = c[i];
      R m = R();
      for (int j = 0; j < i; ++j) m = m + k;  // i * c[i] without scalar mult
      r.c.push_back(m);
    }
    r.trim();
    return r;
  }

  template <class T>
  T eval(const T& x, const T& zero) const {
    T acc = zero;
    for (int i = degree(); i >= 0; --i) acc = acc * x + T(c[i]);
    return acc;
  }
};

template <class R>
inline bool ring_is_zero(const DensePoly<R>& p) {
  return p.is_zero();
}

// Exact polynomial division; throws if not exact.
template <class R>
DensePoly<R> exact_div(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  DensePoly<R> rem = a, q;
  if (a.is_zero()) return q;
  q.c.assign(std::max(0, a.degree() - b.degree() + 1), R());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    R t = exact_div(rem.lc(), b.lc());
    int k = rem.degree() - b.degree();
    q.c[k] = t;
    rem = rem - b.scaled(t).shifted(k);
    if (!rem.is_zero() && rem.degree() == k + b.degree())
      throw std::logic_error("inexact polynomial division");
  }
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  q.trim();
  return q;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
template <class R>
DensePoly<R> prem(DensePoly<R> A, const DensePoly<R>& B) {
  if (B.is_zero()) throw std::invalid_argument("prem by zero");
  int dB = B.degree();
  if (A.degree() < dB) return A;
  int steps = A.degree() - dB + 1;
  const R& l = B.lc();
  for (int i = 0; i < steps; ++i) {
    if (A.is_zero()) {
      // still need remaining multiplications by l for consistency, but
      // l^k * 0 = 0
      return A;
    }
    if (A.degree() < dB) {
      for (int j = i; j < steps; ++j) A = A.scaled(l);
      return A;
    }
    R t = A.lc();
    int k = A.degree() - dB;
    A = A.scaled(l) - B.scaled(t).shifted(k);
  }
  return A;
}

// base^e for e >= 1; for e == 0 returns one = nonzero/nonzero.
template <class R>
R ring_pow(const R& base, int e, const R& some_nonzero) {
  if (e == 0) return exact_div(some_nonzero, some_nonzero);
  R r = base;
  for (int i = 1; i < e; ++i) r = r * base;
  return r;
}

// Subresultant PRS (Brown/Collins sign convention via prem(., -.)).
// Requires deg P >= deg Q >= 0, both nonzero. Returns the nonzero
// subresultants of index < deg Q, highest degree first; the final element,
// when of degree 0, is the resultant.
template <class R>
std::vector<DensePoly<R>> subresultant_chain(const DensePoly<R>& P,
                                             const DensePoly<R>& Q) {
  if (P.is_zero() || Q.is_zero() || P.degree() < Q.degree())
    throw std::invalid_argument("subresultant_chain: need deg P >= deg Q >= 0");
  std::vector<DensePoly<R>> out;
  DensePoly<R> A = Q;
  DensePoly<R> B = prem(P, Q.negated());
  R s = ring_pow(Q.lc(), P.degree() - Q.degree(), Q.lc());
  while (!B.is_zero()) {
    int d = A.degree(), e = B.degree();
    out.push_back(B);
    int delta = d - e;
    DensePoly<R> C;
    if (delta > 1) {
      C = B.scaled(ring_pow(B.lc(), delta - 1, B.lc()))
              .coeff_exact_div(ring_pow(s, delta - 1, s));
      out.push_back(C);
    } else {
      C = B;
    }
    if (e == 0) break;
    R den = ring_pow(s, delta, s) * A.lc();
    B = prem(A, B.negated()).coeff_exact_div(den);
    A = C;
    s = A.lc();
  }
  return out;
}

// Chain with subresultant indices attached. Element of index j is (a
// similarity multiple of) the j-th subresultant S_j; indices not present
// correspond to identically-zero subresultants between the listed ones.
template <class R>
struct IndexedSubres {
  DensePoly<R> poly;
  int index;
};

template <class R>
std::vector<IndexedSubres<R>> subresultant_chain_indexed(
    const DensePoly<R>& P, const DensePoly<R>& Q) {
  if (P.is_zero() || Q.is_zero() || P.degree() < Q.degree())
    throw std::invalid_argument("subresultant_chain: need deg P >= deg Q >= 0");
  std::vector<IndexedSubres<R>> out;
  DensePoly<R> A = Q;
  DensePoly<R> B = prem(P, Q.negated());
  R s = ring_pow(Q.lc(), P.degree() - Q.degree(), Q.lc());
  while (!B.is_zero()) {
    int d = A.degree(), e = B.degree();
    out.push_back({B, d - 1});
    int delta = d - e;
    DensePoly<R> C;
    if (delta > 1) {
      C = B.scaled(ring_pow(B.lc(), delta - 1, B.lc()))
              .coeff_exact_div(ring_pow(s, delta - 1, s));
      out.push_back({C, e});
    } else {
      C = B;
    }
    if (e == 0) break;
    R den = ring_pow(s, delta, s) * A.lc();
    B = prem(A, B.negated()).coeff_exact_div(den);
    A = C;
    s = A.lc();
  }
  return out;
}

// Sylvester resultant of P and Q (eliminating their variable); zero when a
// nontrivial common factor exists.
template <class R>
R resultant(const DensePoly<R>& P, const DensePoly<R>& Q) {
  if (P.is_zero() || Q.is_zero()) return R();
  if (P.degree() == 0 && Q.degree() == 0)
    return exact_div(P.lc(), P.lc());
  if (P.degree() == 0) return ring_pow(P.lc(), Q.degree(), P.lc());
  if (Q.degree() == 0) return ring_pow(Q.lc(), P.degree(), Q.lc());
  bool swap = P.degree() < Q.degree();
  const DensePoly<R>& Ph = swap ? Q : P;
  const DensePoly<R>& Qh = swap ? P : Q;
  auto chain = subresultant_chain(Ph, Qh);
  if (chain.empty()) return R();
  const auto& last = chain.back();
  if (last.degree() != 0) return R();  // common factor
  R r = last.lc();
  if (swap && (P.degree() & 1) && (Q.degree() & 1)) r = R() - r;
  return r;
}

}  // namespace btg::num
