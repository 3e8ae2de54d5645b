#include "solver/bitangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "num/aberth.hpp"
#include "num/polyz.hpp"
#include <chrono>
#include <cstdlib>
#include <iostream>
namespace { inline std::chrono::steady_clock::time_point& btg_tick_last() { static auto t = std::chrono::steady_clock::now(); return t; } }
#define BTG_TICK(name) do { if (std::getenv("BTG_TIMING")) { auto _now = std::chrono::steady_clock::now(); std::cerr << "[t] " << name << " " << std::chrono::duration<double,std::milli>(_now-btg_tick_last()).count() << "ms\n"; btg_tick_last() = _now; } } while(0)

namespace btg::solver {

using num::AlgebraicReal;
using num::cx_div;
using num::cx_mul;
using num::cx_poly_eval;
using num::DyComplex;
using num::eval_interval;
using num::gcd_poly;
using num::Int;
using num::isolate_real_roots;
using num::poly_mod;
using num::PolyQ;
using num::squarefree_part;
using num::to_primitive_int;
using num::to_rat_poly;

namespace {

// drop variables 2.. of an (a,b,s,t)-style polynomial whose higher exponents
// are already zero
MultiPoly to_ab(const MultiPoly& p) {
  MultiPoly r(2);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 2; i < m.size(); ++i)
      if (m[i] != 0) throw std::logic_error("to_ab: residual variable");
    r.add_term({m[0], m[1]}, c);
  }
  return r;
}

PolyQ unipoly_a(const MultiPoly& p) { return p.to_unipoly(0); }

std::array<MultiPoly, 5> restriction_coeffs(const Quartic& f, int chart) {
  // chart coordinate gets the unit coefficient; parametrize the line by the
  // two remaining coordinates (s, t)
  int j = -1, k = -1;
  for (int i = 0; i < 3; ++i)
    if (i != chart) (j < 0 ? j : k) = i;
  MultiPoly a = MultiPoly::var(4, 0), b = MultiPoly::var(4, 1);
  MultiPoly s = MultiPoly::var(4, 2), t = MultiPoly::var(4, 3);
  std::vector<MultiPoly> images(3);
  images[chart] = (a * s + b * t).negated();
  images[j] = s;
  images[k] = t;
  MultiPoly F = f.poly().subst(images);
  std::array<MultiPoly, 5> q;
  for (int m = 0; m <= 4; ++m)
    q[m] = to_ab(F.coeff_of(2, m).coeff_of(3, 4 - m));
  return q;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> square_conditions(const Quartic& f, int chart) {
  auto q = restriction_coeffs(f, chart);
  MultiPoly inner = q[4] * q[2].scaled(Rat(4)) - q[3] * q[3];
  MultiPoly g1 = q[3] * inner - q[4] * q[4] * q[1].scaled(Rat(8));
  MultiPoly g2 = inner * inner - q[4] * q[4] * q[4] * q[0].scaled(Rat(64));
  return {g1, g2};
}

CurveValue SolveContext::curve_value(const MultiPoly& P) const {
  CurveValue v;
  v.sym = P;
  int d = std::max(0, P.degree_in(1));
  v.b_parity = d & 1;
  if (mod_cache.wq.is_zero()) {
    mod_cache.wq = to_rat_poly(*W);
    // scale monic once so each reduction step divides by 1
    mod_cache.wq = mod_cache.wq.scaled(Rat(1) / mod_cache.wq.lc());
    mod_cache.s11m = poly_mod(to_rat_poly(s11), mod_cache.wq);
    mod_cache.s10n = poly_mod(to_rat_poly(s10).negated(), mod_cache.wq);
    mod_cache.p10 = {PolyQ::constant(Rat(1))};
    mod_cache.p11 = {PolyQ::constant(Rat(1))};
  }
  auto reduce = [&](const PolyQ& p) { return poly_mod(p, mod_cache.wq); };
  while (static_cast<int>(mod_cache.p10.size()) <= d) {
    mod_cache.p10.push_back(reduce(mod_cache.p10.back() * mod_cache.s10n));
    mod_cache.p11.push_back(reduce(mod_cache.p11.back() * mod_cache.s11m));
  }
  PolyQ acc;
  for (int jj = 0; jj <= d; ++jj) {
    MultiPoly Pj = P.coeff_of(1, static_cast<unsigned>(jj));
    if (Pj.is_zero()) continue;
    PolyQ pj = reduce(unipoly_a(Pj));
    acc = acc + reduce(reduce(pj * mod_cache.p10[jj]) * mod_cache.p11[d - jj]);
  }
  v.reduced = to_primitive_int(acc);
  return v;
}

int SolveContext::sign_s11(const AlgebraicReal& alpha) const {
  return alpha.sign_of(s11);
}

int SolveContext::sign_at(const AlgebraicReal& alpha, const CurveValue& v) const {
  for (long prec : {96L, 256L}) {
    alpha.refine_to(prec);
    DInterval ib = b_interval(alpha, prec);
    auto s = v.sym.eval_interval({alpha.interval(), ib}, prec).sign();
    if (s) return *s;
  }
  int s = alpha.sign_of(v.reduced);
  if (s == 0) return 0;
  if (v.b_parity) s *= sign_s11(alpha);
  return s;
}

DInterval SolveContext::b_interval(const AlgebraicReal& alpha, long prec) const {
  for (int guard = 0;; ++guard) {
    DInterval den = eval_interval(s11, alpha.interval());
    if (!den.contains_zero()) {
      DInterval numi = eval_interval(s10, alpha.interval());
      return DInterval::div(-numi, den, prec);
    }
    if (guard > 4000) throw std::runtime_error("b_interval: s11 straddles zero");
    alpha.refine_step();
  }
}

std::array<DInterval, 3> SolveContext::line_interval(const AlgebraicReal& alpha,
                                                     long prec) const {
  alpha.refine_to(prec);
  DInterval ia = alpha.interval();
  DInterval ib = b_interval(alpha, prec);
  std::array<DInterval, 3> out;
  const auto& wi = witness_inv.m;
  for (int j = 0; j < 3; ++j) {
    DInterval e = DInterval::from_rat(wi[0][j], prec) +
                  num::mul_rat(wi[1][j], ia, prec) +
                  num::mul_rat(wi[2][j], ib, prec);
    out[j] = e.round_out(prec);
  }
  return out;
}

std::array<MultiPoly, 4> SolveContext::gradient_form(
    const std::array<Rat, 3>& w) const {
  MultiPoly a = MultiPoly::var(4, 0), b = MultiPoly::var(4, 1);
  MultiPoly s = MultiPoly::var(4, 2), t = MultiPoly::var(4, 3);
  std::vector<MultiPoly> images = {(a * s + b * t).negated(), s, t};
  auto grad = f_mapped.gradient();
  MultiPoly G(4);
  for (int i = 0; i < 3; ++i) {
    if (sgn(w[i]) == 0) continue;
    G = G + grad[i].subst(images).scaled(w[i]);
  }
  std::array<MultiPoly, 4> out;
  for (int k = 0; k <= 3; ++k)
    out[k] = to_ab(G.coeff_of(2, static_cast<unsigned>(k)).coeff_of(3, 3 - k));
  return out;
}

std::array<MultiPoly, 2> SolveContext::line_form(
    const std::array<Rat, 3>& m) const {
  // m(z(s,t)) with z = (-(a s + b t), s, t)
  MultiPoly a = MultiPoly::var(2, 0), b = MultiPoly::var(2, 1);
  MultiPoly cs = MultiPoly::constant(2, m[1]) - a.scaled(m[0]);
  MultiPoly ct = MultiPoly::constant(2, m[2]) - b.scaled(m[0]);
  return {cs, ct};
}

int BitangentSet::real_count() const {
  int n = 0;
  for (const auto& b : list)
    if (b.is_real()) n += b.multiplicity;
  return n;
}

int BitangentSet::split_count() const {
  int n = 0;
  for (const auto& b : list)
    if (b.is_real() && b.reality == Reality::real_split) n += b.multiplicity;
  return n;
}

int BitangentSet::nonsplit_count() const {
  int n = 0;
  for (const auto& b : list)
    if (b.reality == Reality::real_non_split) n += b.multiplicity;
  return n;
}

namespace {

struct Attempt {
  std::shared_ptr<SolveContext> ctx;
  bool ok = false;
};

Attempt try_solve(const Quartic& f, const ProjectiveMap& A) {
  Attempt at;
  auto ctx = std::make_shared<SolveContext>();
  ctx->f_orig = f;
  ctx->witness = A;
  ctx->witness_inv = A.inverse();
  ctx->f_mapped = substitute(f, A);

  auto q = restriction_coeffs(ctx->f_mapped, 0);
  for (int m = 0; m <= 4; ++m) ctx->q[m] = q[m];
  {
    MultiPoly inner = q[4] * q[2].scaled(Rat(4)) - q[3] * q[3];
    ctx->G1 = q[3] * inner - q[4] * q[4] * q[1].scaled(Rat(8));
    ctx->G2 = inner * inner - q[4] * q[4] * q[4] * q[0].scaled(Rat(64));
    ctx->tangency_sym = {q[4] * q[4].scaled(Rat(8)), q[4] * q[3].scaled(Rat(4)),
                         inner};
    ctx->disc_sym = q[3] * q[3].scaled(Rat(3)) - q[4] * q[2].scaled(Rat(8));
  }
  if (ctx->G1.is_zero() || ctx->G2.is_zero()) return at;

  auto P1 = ctx->G1.as_univariate(1);
  auto P2 = ctx->G2.as_univariate(1);
  if (P1.degree() < 1 || P2.degree() < 1) return at;
  bool swap = P1.degree() > P2.degree();
  auto chain = swap ? num::subresultant_chain_indexed(P1, P2)
                    : num::subresultant_chain_indexed(P2, P1);
  if (chain.empty() || chain.back().poly.degree() != 0) return at;

  PolyZ R = to_primitive_int(unipoly_a(chain.back().poly.lc()));
  if (R.is_zero()) return at;
  num::DensePoly<MultiPoly> S1;
  bool have_s1 = false;
  for (const auto& e : chain)
    if (e.index == 1 && e.poly.degree() == 1) {
      S1 = e.poly;
      have_s1 = true;
    }
  if (!have_s1) return at;
  {
    PolyQ s11q = unipoly_a(S1.coeff(1));
    PolyQ s10q = unipoly_a(S1.coeff(0));
    // clear a common denominator so the ratio is preserved
    Int den(1);
    for (const auto& c : s11q.c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : s10q.c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    PolyZ s11z, s10z;
    for (const auto& c : s11q.c) {
      Rat t = c * Rat(den);
      t.canonicalize();
      s11z.c.push_back(t.get_num());
    }
    for (const auto& c : s10q.c) {
      Rat t = c * Rat(den);
      t.canonicalize();
      s10z.c.push_back(t.get_num());
    }
    s11z.trim();
    s10z.trim();
    ctx->s11 = s11z;
    ctx->s10 = s10z;
  }
  if (ctx->s11.is_zero()) return at;

  ctx->q4a = to_primitive_int(unipoly_a(q[4]));
  if (ctx->q4a.is_zero()) return at;

  PolyZ W = squarefree_part(R);
  {
    PolyZ g = gcd_poly(W, ctx->q4a);
    if (g.degree() > 0) W = num::exact_div(W, g);
    // leading-coefficient degeneracies in b
    PolyZ l1 = to_primitive_int(unipoly_a(ctx->G1.coeff_of(1, P1.degree())));
    PolyZ l2 = to_primitive_int(unipoly_a(ctx->G2.coeff_of(1, P2.degree())));
    PolyZ D = gcd_poly(l1, l2);
    if (D.degree() > 0) {
      PolyZ g2 = gcd_poly(W, D);
      if (g2.degree() > 0) W = num::exact_div(W, g2);
    }
  }
  if (W.degree() != 28) return at;
  if (W.lc() < 0) W = W.negated();
  ctx->W = std::make_shared<const PolyZ>(W);

  // every root must have a unique finite partner b
  {
    PolyQ wq = to_rat_poly(W);
    PolyZ s11r = to_primitive_int(poly_mod(to_rat_poly(ctx->s11), wq));
    if (gcd_poly(W, s11r).degree() != 0) return at;
  }
  BTG_TICK("  guards");

  at.ctx = ctx;
  at.ok = true;
  return at;
}

}  // namespace

BitangentSet compute_bitangents(const Quartic& f, std::uint64_t seed,
                                int max_retries) {
  if (!geom::is_smooth(f, seed))
    throw std::domain_error("compute_bitangents: quartic is not smooth");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  BTG_TICK("smooth");
  Attempt at;
  int retries = 0;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    at = try_solve(f, geom::random_map(rng));
    if (at.ok) break;
    ++retries;
  }
  BTG_TICK("try_solve loop");
  if (!at.ok)
    throw std::runtime_error(
        "compute_bitangents: no generic coordinate change found (retry cap)");
  auto ctx = at.ctx;

  BitangentSet set;
  set.quartic_hash = f.hash();
  set.ctx = ctx;
  set.map_retries = retries;
  set.total_multiplicity = 28;

  CurveValue disc = ctx->curve_value(ctx->disc_sym);
  BTG_TICK("disc curve_value");
  std::array<CurveValue, 3> entry;
  {
    const auto& wi = ctx->witness_inv.m;
    for (int j = 0; j < 3; ++j) {
      MultiPoly e = MultiPoly::constant(2, wi[0][j]) +
                    MultiPoly::var(2, 0).scaled(wi[1][j]) +
                    MultiPoly::var(2, 1).scaled(wi[2][j]);
      entry[j] = ctx->curve_value(e);
    }
  }

  BTG_TICK("entry curve_values");
  auto roots = isolate_real_roots(*ctx->W);
  BTG_TICK("isolate");
  int idx = 0;
  for (const auto& r : roots) {
    Bitangent bt;
    bt.index = idx++;
    bt.alpha = AlgebraicReal(ctx->W, r);
    int ds = ctx->sign_at(bt.alpha, disc);
    bt.hyperflex = ds == 0;
    bt.reality = ds >= 0 ? Reality::real_split : Reality::real_non_split;
    bt.line = ctx->line_interval(bt.alpha, 128);
    for (int j = 0; j < 3; ++j)
      bt.line_exact_zero[j] = ctx->sign_at(bt.alpha, entry[j]) == 0;
    set.list.push_back(std::move(bt));
  }
  BTG_TICK("per-root loop");

  // complex conjugate pairs: approximations from the simultaneous iteration
  int n_real = static_cast<int>(roots.size());
  if ((28 - n_real) % 2 != 0)
    throw std::logic_error("non-real roots of a real polynomial must pair up");
  int n_pairs = (28 - n_real) / 2;
  if (n_pairs > 0) {
    const long cprec = 160;
    std::vector<num::ComplexRoot> reps;
    for (long tol : {80L, 160L, 320L}) {
      reps.clear();
      for (const auto& z : num::complex_root_clusters(*ctx->W, tol, seed))
        if (z.im.sign() > 0) reps.push_back(z);
      if (static_cast<int>(reps.size()) == n_pairs) break;
    }
    if (static_cast<int>(reps.size()) != n_pairs)
      throw std::runtime_error("complex clustering disagrees with the exact real count");
    std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
      if (cmp(x.re, y.re) != 0) return cmp(x.re, y.re) < 0;
      return cmp(x.im, y.im) < 0;
    });
    for (const auto& z : reps) {
      Bitangent bt;
      bt.index = idx++;
      bt.reality = Reality::complex_pair;
      DyComplex za{z.re, z.im};
      DyComplex s10v = cx_poly_eval(ctx->s10, za, cprec);
      DyComplex s11v = cx_poly_eval(ctx->s11, za, cprec);
      DyComplex zb = cx_div({-s10v.re, -s10v.im}, s11v, cprec);
      bt.a_re = za.re;
      bt.a_im = za.im;
      bt.b_re = zb.re;
      bt.b_im = zb.im;
      const auto& wi = ctx->witness_inv.m;
      for (int j = 0; j < 3; ++j) {
        // (1, a, b) · witness_inv, complex; store re in `line`
        long p2 = 120;
        DInterval re = DInterval::from_rat(wi[0][j], p2) +
                       num::mul_rat(wi[1][j], DInterval::point(za.re), p2) +
                       num::mul_rat(wi[2][j], DInterval::point(zb.re), p2);
        bt.line[j] = re.round_out(p2);
      }
      set.list.push_back(std::move(bt));
    }
  }
  return set;
}

bool validate_square_conditions(const BitangentSet& set) {
  // both perfect-square conditions vanish identically on the solution curve
  return set.ctx->curve_value(set.ctx->G1).reduced.is_zero() &&
         set.ctx->curve_value(set.ctx->G2).reduced.is_zero();
}

TangencyPair tangency_points(const BitangentSet& set, const Bitangent& bt,
                             long prec) {
  const auto& ctx = *set.ctx;
  TangencyPair out;
  auto map_point = [&](const std::array<DInterval, 3>& z) {
    std::array<DInterval, 3> r;
    for (int i = 0; i < 3; ++i) {
      DInterval acc(0);
      for (int j = 0; j < 3; ++j)
        acc = acc + num::mul_rat(ctx.witness.m[i][j], z[j], prec + 16);
      r[i] = acc.round_out(prec);
    }
    return r;
  };

  if (bt.is_real()) {
    // refine until the quadratic data is sharp enough
    for (long p = std::max(prec + 32, 128L);; p *= 2) {
      if (p > 16 * std::max(ctx.precision_cap, 4096L))
        throw std::runtime_error("tangency_points: undecidable at precision cap");
      bt.alpha.refine_to(p);
      DInterval ia = bt.alpha.interval();
      DInterval ib = ctx.b_interval(bt.alpha, p);
      std::vector<DInterval> pt{ia, ib};
      DInterval A = ctx.tangency_sym[0].eval_interval(pt, p);
      DInterval B = ctx.tangency_sym[1].eval_interval(pt, p);
      DInterval C = ctx.tangency_sym[2].eval_interval(pt, p);
      if (A.contains_zero()) continue;
      DInterval disc = B * B - (A * C).round_out(p) * DInterval(4);
      DInterval two_a = A * DInterval(2);
      auto point_at = [&](const DInterval& s_par) {
        std::array<DInterval, 3> z{
            (-(ia * s_par + ib)).round_out(p), s_par, DInterval(1)};
        return map_point(z);
      };
      if (bt.hyperflex) {
        DInterval s0 = DInterval::div(-B, two_a, p);
        out.real = true;
        out.z1 = out.z2 = point_at(s0);
        return out;
      }
      if (bt.reality == Reality::real_split) {
        if (disc.sign().value_or(0) <= 0) continue;
        DInterval rt = disc.sqrt(p);
        DInterval s1 = DInterval::div(-B - rt, two_a, p);
        DInterval s2 = DInterval::div(-B + rt, two_a, p);
        if (!(s1.hi < s2.lo) && !(s2.hi < s1.lo)) continue;
        if (s2.hi < s1.lo) std::swap(s1, s2);
        out.real = true;
        out.z1 = point_at(s1);
        out.z2 = point_at(s2);
        return out;
      }
      // non-split: s = -B/(2A) ± i sqrt(-disc)/(2A)
      if (disc.sign().value_or(0) >= 0) continue;
      DInterval sre = DInterval::div(-B, two_a, p);
      DInterval sim = DInterval::div((-disc).sqrt(p), two_a, p);
      out.real = false;
      std::array<DInterval, 3> zre{(-(ia * sre + ib)).round_out(p), sre,
                                   DInterval(1)};
      std::array<DInterval, 3> zim{(-(ia * sim)).round_out(p), sim, DInterval(0)};
      out.re = map_point(zre);
      out.im = map_point(zim);
      return out;
    }
  }

  // complex representative: approximate arithmetic only
  const long p = std::max(prec, 160L);
  DyComplex a{bt.a_re, bt.a_im}, b{bt.b_re, bt.b_im};
  std::vector<DInterval> dummy;
  auto evalc = [&](const MultiPoly& m) {
    DyComplex acc{num::Dyadic(), num::Dyadic()};
    for (const auto& [mono, c] : m.terms()) {
      DyComplex t{num::Dyadic::from_rat_down(c, p), num::Dyadic()};
      for (unsigned e = 0; e < mono[0]; ++e) t = cx_mul(t, a, p);
      for (unsigned e = 0; e < mono[1]; ++e) t = cx_mul(t, b, p);
      acc = num::cx_add(acc, t, p);
    }
    return acc;
  };
  DyComplex A = evalc(ctx.tangency_sym[0]);
  DyComplex B = evalc(ctx.tangency_sym[1]);
  DyComplex C = evalc(ctx.tangency_sym[2]);
  // complex sqrt of B^2 - 4AC
  DyComplex D = num::cx_sub(cx_mul(B, B, p),
                            cx_mul(cx_mul(A, C, p), {num::Dyadic(Int(4), 0), num::Dyadic()}, p), p);
  double dr = D.re.to_double(), di = D.im.to_double();
  double mod = std::sqrt(std::hypot(dr, di));
  double arg = std::atan2(di, dr) / 2;
  DyComplex rt{num::Dyadic::from_rat_down(Rat(mod * std::cos(arg)), p),
               num::Dyadic::from_rat_down(Rat(mod * std::sin(arg)), p)};
  // one Newton polish of the square root in dyadic complex arithmetic
  for (int it = 0; it < 3; ++it) {
    if (rt.re.is_zero() && rt.im.is_zero()) break;
    DyComplex q = cx_div(D, rt, p);
    rt = {Dyadic(((rt.re + q.re)).man, (rt.re + q.re).exp - 1),
          Dyadic(((rt.im + q.im)).man, (rt.im + q.im).exp - 1)};
  }
  DyComplex twoA = cx_mul(A, {num::Dyadic(Int(2), 0), num::Dyadic()}, p);
  DyComplex s1 = cx_div(num::cx_sub({-B.re, -B.im}, rt, p), twoA, p);
  auto pt_of = [&](const DyComplex& s) {
    // z = (-(a s + b), s, 1) mapped by the witness
    DyComplex z0 = num::cx_sub({num::Dyadic(), num::Dyadic()},
                               num::cx_add(cx_mul(a, s, p), b, p), p);
    std::array<DyComplex, 3> z{z0, s, DyComplex{num::Dyadic(Int(1), 0), num::Dyadic()}};
    std::array<DyComplex, 3> r;
    for (int i = 0; i < 3; ++i) {
      DyComplex acc{num::Dyadic(), num::Dyadic()};
      for (int j = 0; j < 3; ++j) {
        DyComplex w{num::Dyadic::from_rat_down(ctx.witness.m[i][j], p), num::Dyadic()};
        acc = num::cx_add(acc, cx_mul(w, z[j], p), p);
      }
      r[i] = acc;
    }
    return r;
  };
  auto zz = pt_of(s1);
  out.real = false;
  for (int i = 0; i < 3; ++i) {
    out.re[i] = DInterval::point(zz[i].re);
    out.im[i] = DInterval::point(zz[i].im);
  }
  return out;
}

}  // namespace btg::solver
