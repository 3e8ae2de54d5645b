#include "num/polyz.hpp"

#include <algorithm>
#include <stdexcept>

namespace btg::num {

PolyZ to_primitive_int(const PolyQ& p) {
  if (p.is_zero()) return PolyZ();
  Int den(1);
  for (const auto& c : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  PolyZ r;
  r.c.reserve(p.c.size());
  for (const auto& c : p.c) {
    Rat t = c * Rat(den);
    t.canonicalize();
    r.c.push_back(t.get_num());
  }
  r.trim();
  return primitive_part(r);
}

PolyQ to_rat_poly(const PolyZ& p) {
  PolyQ r;
  r.c.reserve(p.c.size());
  for (const auto& c : p.c) r.c.emplace_back(c);
  r.trim();
  return r;
}

Int content(const PolyZ& p) {
  Int g(0);
  for (const auto& c : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

PolyZ primitive_part(const PolyZ& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (g == 1) return p;
  PolyZ r = p;
  for (auto& c : r.c) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

PolyZ gcd_poly(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Int ca = content(a), cb = content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  PolyZ A = primitive_part(a), B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    PolyZ r = primitive_part(prem(A, B));
    A = B;
    B = r;
  }
  if (A.lc() < 0) A = A.negated();
  return A.scaled(cg);
}

PolyZ squarefree_part(const PolyZ& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  PolyZ g = gcd_poly(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(exact_div(primitive_part(p), primitive_part(g)));
}

std::vector<std::pair<PolyZ, int>> squarefree_decomposition(const PolyZ& p) {
  // Yun's algorithm on the primitive part
  std::vector<std::pair<PolyZ, int>> out;
  PolyZ f = primitive_part(p);
  if (f.is_zero() || f.degree() == 0) return out;
  if (f.lc() < 0) f = f.negated();
  PolyZ fp = f.derivative();
  PolyZ a = gcd_poly(f, fp);
  PolyZ b = exact_div(f, a);
  PolyZ c = exact_div(fp, a);
  PolyZ d = c - b.derivative();
  int i = 1;
  while (!(b.degree() == 0)) {
    PolyZ g = gcd_poly(b, d);
    if (g.degree() > 0) out.emplace_back(primitive_part(g), i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

PolyQ poly_mod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_mod by zero");
  PolyQ r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat t = r.lc() / b.lc();
    int k = r.degree() - b.degree();
    r = r - b.scaled(t).shifted(k);
    r.trim();
  }
  return r;
}

Rat eval_rat(const PolyZ& p, const Rat& x) {
  Rat acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Rat(p.c[i]);
  return acc;
}

Dyadic eval_dyadic(const PolyZ& p, const Dyadic& x) {
  Dyadic acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Dyadic(p.c[i], 0);
  return acc;
}

DInterval eval_interval(const PolyZ& p, const DInterval& x) {
  DInterval acc(0);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + DInterval::exact_int(p.c[i]);
  return acc;
}

int sign_at(const PolyZ& p, const Dyadic& x) { return eval_dyadic(p, x).sign(); }

int sign_at(const PolyZ& p, const Rat& x) { return sgn(eval_rat(p, x)); }

long root_bound_exp(const PolyZ& p) {
  if (p.is_zero() || p.degree() == 0) return 1;
  std::size_t mx = 0;
  for (const auto& c : p.c)
    mx = std::max(mx, mpz_sizeinbase(c.get_mpz_t(), 2));
  std::size_t ln = mpz_sizeinbase(p.lc().get_mpz_t(), 2);
  long k = static_cast<long>(mx) - static_cast<long>(ln) + 2;
  return std::max(1L, k);
}

namespace {

void taylor_shift_1(std::vector<Int>& c) {
  int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
}

int var_count(const std::vector<Int>& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Descartes bound for roots of q in (0,1): var(shift1(reverse(q)))
int descartes_01(const std::vector<Int>& q) {
  std::vector<Int> r(q.rbegin(), q.rend());
  taylor_shift_1(r);
  return var_count(r);
}

struct Isolator {
  const PolyZ* p;
  std::vector<IsolatedRoot> out;
  int flip;         // +1 for positive roots, -1 for mirrored negatives
  long bound_exp;   // roots of q in (0,1) map to (0,2^bound_exp) then flip

  Dyadic map_back(const Dyadic& t) const {
    Dyadic v(t.man, t.exp + bound_exp);
    return flip > 0 ? v : -v;
  }

  void emit_interval(const Dyadic& a, const Dyadic& b) {
    Dyadic lo = map_back(a), hi = map_back(b);
    if (hi < lo) std::swap(lo, hi);
    out.push_back({DInterval(lo, hi), false});
  }
  void emit_exact(const Dyadic& a) {
    Dyadic v = map_back(a);
    out.push_back({DInterval(v, v), true});
  }

  // q has roots in (0,1) corresponding to p on (a, a + 2^-depth) pre-map
  void rec(std::vector<Int> q, const Dyadic& a, long depth) {
    int v = descartes_01(q);
    if (v == 0) return;
    Dyadic b = a + Dyadic(Int(1), -depth);
    if (v == 1) {
      emit_interval(a, b);
      return;
    }
    if (depth > 4000)
      throw std::runtime_error("root isolation depth exceeded");
    int n = static_cast<int>(q.size()) - 1;
    // left: 2^n q(x/2)
    std::vector<Int> ql = q;
    for (int i = 0; i <= n; ++i)
      mpz_mul_2exp(ql[i].get_mpz_t(), ql[i].get_mpz_t(), n - i);
    // right: ql(x+1)
    std::vector<Int> qr = ql;
    taylor_shift_1(qr);
    Dyadic mid = a + Dyadic(Int(1), -depth - 1);
    if (sgn(qr[0]) == 0) {  // q(1/2) == 0
      emit_exact(mid);
    }
    rec(std::move(ql), a, depth + 1);
    rec(std::move(qr), mid, depth + 1);
  }
};

}  // namespace

namespace {

// Given [a, b] holding exactly one interior root of squarefree p, with one or
// both endpoints possibly being (other) roots, return an enclosing bracket
// with non-root endpoints, or the interior root exactly.
IsolatedRoot repair_bracket(const PolyZ& p, const PolyZ& dp, Dyadic a, Dyadic b) {
  // effective sign immediately inside the bracket at a root endpoint
  auto sign_right = [&](const Dyadic& t) {
    int s = sign_at(p, t);
    return s != 0 ? s : sign_at(dp, t);
  };
  for (int guard = 0; guard < 8000; ++guard) {
    if (sign_at(p, a) != 0 && sign_at(p, b) != 0)
      return {DInterval(a, b), false};
    Dyadic m = Dyadic((a + b).man, (a + b).exp - 1);
    int sm = sign_at(p, m);
    if (sm == 0) return {DInterval(m, m), true};
    if (sign_right(a) * sm < 0)
      b = m;
    else
      a = m;
  }
  throw std::runtime_error("bracket repair failed to converge");
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const PolyZ& p_in) {
  if (p_in.is_zero())
    throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  PolyZ p = p_in;
  std::vector<IsolatedRoot> out;
  // root at zero
  int tz = 0;
  while (tz <= p.degree() && sgn(p.c[tz]) == 0) ++tz;
  if (tz > 0) {
    out.push_back({DInterval(0), true});
    PolyZ q;
    q.c.assign(p.c.begin() + tz, p.c.end());
    p = q;
  }
  if (p.degree() >= 1) {
    long k = root_bound_exp(p);
    // positive roots: q(x) = p(2^k x), x in (0,1)
    for (int flip : {1, -1}) {
      std::vector<Int> q(p.c.begin(), p.c.end());
      int n = static_cast<int>(q.size()) - 1;
      for (int i = 0; i <= n; ++i) {
        if (flip < 0 && (i & 1)) q[i] = -q[i];
        mpz_mul_2exp(q[i].get_mpz_t(), q[i].get_mpz_t(),
                     static_cast<unsigned long>(k) * i);
      }
      Isolator iso{&p, {}, flip, k};
      iso.rec(std::move(q), Dyadic(), 0);
      for (auto& r : iso.out) out.push_back(std::move(r));
    }
    // endpoints must not be roots of the full input (the stripped zero root
    // can sit on a subdivision boundary)
    PolyZ dp = p_in.derivative();
    for (auto& r : out)
      if (!r.exact &&
          (sign_at(p_in, r.iv.lo) == 0 || sign_at(p_in, r.iv.hi) == 0))
        r = repair_bracket(p_in, dp, r.iv.lo, r.iv.hi);
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.iv.lo < b.iv.lo;
  });
  return out;
}

std::vector<std::pair<DInterval, int>> isolate_real_roots_mult(const PolyQ& p,
                                                               long prec) {
  PolyZ f = to_primitive_int(p);
  if (f.is_zero())
    throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  struct Entry {
    PolyZ factor;
    IsolatedRoot root;
    int mult;
  };
  std::vector<Entry> entries;
  for (const auto& [g, m] : squarefree_decomposition(f))
    for (const auto& r : isolate_real_roots(g))
      entries.push_back({g, r, m});
  for (auto& e : entries)
    e.root.iv = refine_root(e.factor, e.root.iv, prec);
  // distinct roots across coprime factors: refine until pairwise disjoint
  bool again = true;
  long extra = prec;
  while (again) {
    again = false;
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return a.root.iv.lo < b.root.iv.lo;
    });
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (!(entries[i].root.iv.hi < entries[i + 1].root.iv.lo)) {
        extra *= 2;
        entries[i].root.iv = refine_root(entries[i].factor, entries[i].root.iv, extra);
        entries[i + 1].root.iv =
            refine_root(entries[i + 1].factor, entries[i + 1].root.iv, extra);
        again = true;
      }
    }
    if (extra > (1L << 22))
      throw std::runtime_error("failed to separate roots");
  }
  std::vector<std::pair<DInterval, int>> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.emplace_back(e.root.iv, e.mult);
  return out;
}

DInterval refine_root(const PolyZ& p, DInterval iv, long prec) {
  if (iv.is_point()) return iv;
  int slo = sign_at(p, iv.lo);
  int shi = sign_at(p, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine_root: interval does not isolate (no sign change)");
  Dyadic target(Int(1), -prec);
  while (target < iv.width()) {
    Dyadic m = iv.mid();
    int sm = sign_at(p, m);
    if (sm == 0) return DInterval(m, m);
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

}  // namespace btg::num
