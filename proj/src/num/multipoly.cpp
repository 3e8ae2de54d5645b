#include "num/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace btg::num {

namespace {
int common_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.arity();
  if (b.is_zero()) return a.arity();
  if (a.arity() != b.arity())
    throw std::invalid_argument("MultiPoly arity mismatch");
  return a.arity();
}
}  // namespace

MultiPoly MultiPoly::constant(int arity, const Rat& v) {
  MultiPoly p(arity);
  if (sgn(v) != 0) p.terms_[Mono(arity, 0)] = v;
  return p;
}

MultiPoly MultiPoly::var(int arity, int idx, unsigned pow) {
  MultiPoly p(arity);
  Mono m(arity, 0);
  m[idx] = pow;
  p.terms_[m] = Rat(1);
  return p;
}

void MultiPoly::add_term(const Mono& m, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  if (static_cast<int>(m.size()) != arity_)
    throw std::invalid_argument("MultiPoly monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = coeff;
  } else {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(common_arity(a, b));
  r.terms_ = a.is_zero() ? b.terms_ : a.terms_;
  if (!a.is_zero())
    for (const auto& [m, c] : b.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_[m] = c;
      } else {
        it->second += c;
        if (sgn(it->second) == 0) r.terms_.erase(it);
      }
    }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + b.negated();
}

MultiPoly MultiPoly::negated() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
  if (sgn(s) == 0) return MultiPoly(arity_);
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  int ar = common_arity(a, b);
  MultiPoly r(ar);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MultiPoly::Mono m(ar);
      for (int i = 0; i < ar; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(arity_, Rat(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (unsigned e : m) t += static_cast<int>(e);
    d = std::max(d, t);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

MultiPoly MultiPoly::coeff_of(int var, unsigned k) const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_)
    if (m[var] == k) {
      Mono mm = m;
      mm[var] = 0;
      r.add_term(mm, c);
    }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) {
      Mono mm = m;
      mm[var] -= 1;
      r.add_term(mm, c * Rat(static_cast<long>(m[var])));
    }
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& pt) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < arity_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= pt[i];
    acc += t;
  }
  return acc;
}

DInterval MultiPoly::eval_interval(const std::vector<DInterval>& pt,
                                   long prec) const {
  DInterval acc(0);
  for (const auto& [m, c] : terms_) {
    DInterval t = DInterval::from_rat(c, prec);
    for (int i = 0; i < arity_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = (t * pt[i]).round_out(prec);
    acc = acc + t;
  }
  return acc.round_out(prec);
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != arity_)
    throw std::invalid_argument("subst: wrong image count");
  int new_ar = 0;
  for (const auto& g : images) new_ar = std::max(new_ar, g.arity());
  // power tables
  std::vector<std::vector<MultiPoly>> pows(arity_);
  for (int i = 0; i < arity_; ++i)
    pows[i].push_back(MultiPoly::constant(new_ar, Rat(1)));
  MultiPoly acc(new_ar);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(new_ar, c);
    for (int i = 0; i < arity_; ++i) {
      while (pows[i].size() <= m[i])
        pows[i].push_back(pows[i].back() * images[i]);
      if (m[i] > 0) t = t * pows[i][m[i]];
    }
    acc = acc + t;
  }
  return acc;
}

DensePoly<MultiPoly> MultiPoly::as_univariate(int var) const {
  DensePoly<MultiPoly> r;
  int d = degree_in(var);
  if (d < 0) return r;
  r.c.resize(d + 1);
  for (int k = 0; k <= d; ++k) r.c[k] = coeff_of(var, static_cast<unsigned>(k));
  r.trim();
  return r;
}

MultiPoly MultiPoly::from_univariate(const DensePoly<MultiPoly>& p, int var,
                                     int arity) {
  MultiPoly acc(arity);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.c[k].is_zero()) continue;
    acc = acc + p.c[k] * MultiPoly::var(arity, var, static_cast<unsigned>(k));
  }
  return acc;
}

PolyQ MultiPoly::to_unipoly(int var) const {
  PolyQ r;
  int d = degree_in(var);
  r.c.assign(std::max(0, d + 1), Rat(0));
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < arity_; ++i)
      if (i != var && m[i] != 0)
        throw std::logic_error("to_unipoly: polynomial is not univariate");
    r.c[m[var]] = c;
  }
  r.trim();
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (int i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("MultiPoly division by zero");
  if (a.is_zero()) return MultiPoly(a.arity());
  int ar = common_arity(a, b);
  MultiPoly r = a, q(ar);
  const auto& ltb = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& ltr = *r.terms().rbegin();
    MultiPoly::Mono m(ar);
    for (int i = 0; i < ar; ++i) {
      if (ltr.first[i] < ltb.first[i])
        throw std::logic_error("inexact MultiPoly division");
      m[i] = ltr.first[i] - ltb.first[i];
    }
    MultiPoly t(ar);
    t.add_term(m, ltr.second / ltb.second);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

Sign sign_at_point(const MultiPoly& p, const std::vector<DInterval>& pt) {
  bool all_points = true;
  for (const auto& iv : pt)
    if (!iv.is_point()) all_points = false;
  if (all_points) {
    std::vector<Rat> rp;
    rp.reserve(pt.size());
    for (const auto& iv : pt) rp.push_back(iv.lo.to_rat());
    return sign_at_point(p, rp);
  }
  auto s = p.eval_interval(pt, 1 << 14).sign();
  if (!s) return Sign::unknown;
  return static_cast<Sign>(*s);
}

Sign sign_at_point(const MultiPoly& p, const std::vector<Rat>& pt) {
  return static_cast<Sign>(sgn(p.eval(pt)));
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  if (p.degree_in(var) <= 0 || q.degree_in(var) <= 0)
    throw std::invalid_argument("resultant: nothing to eliminate");
  auto P = p.as_univariate(var);
  auto Q = q.as_univariate(var);
  MultiPoly r = resultant(P, Q);
  if (r.is_zero()) return MultiPoly(p.arity());
  return r;
}

}  // namespace btg::num
