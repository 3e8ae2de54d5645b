#include "qtype/qtype.hpp"

#include "num/polyz.hpp"

namespace btg::qtype {

using num::DensePoly;
using num::gcd_poly;
using num::MultiPoly;
using num::PolyZ;
using solver::CurveValue;
using solver::Reality;
using solver::SolveContext;

namespace {

DensePoly<MultiPoly> to_dense(const std::array<MultiPoly, 3>& t) {
  DensePoly<MultiPoly> p;
  p.c = {t[2], t[1], t[0]};  // C', B', A' -> coefficients of s^0, s^1, s^2
  p.trim();
  return p;
}

DensePoly<MultiPoly> to_dense4(const std::array<MultiPoly, 4>& g) {
  DensePoly<MultiPoly> p;
  p.c = {g[0], g[1], g[2], g[3]};
  p.trim();
  return p;
}

DensePoly<MultiPoly> to_dense2(const std::array<MultiPoly, 2>& m) {
  DensePoly<MultiPoly> p;
  p.c = {m[1], m[0]};  // coeff of t is the constant term in s at t = 1
  p.trim();
  return p;
}

// Res(T', M) as a polynomial in (a, b); T' has everywhere-positive leading
// coefficient, so all specialization corrections are positive and signs are
// faithful.
MultiPoly res_tm(const SolveContext& ctx, const std::array<Rat, 3>& mline) {
  auto M = to_dense2(ctx.line_form(mline));
  if (M.is_zero())
    throw std::logic_error("restriction of the infinity line vanished");
  return num::resultant(to_dense(ctx.tangency_sym), M);
}

MultiPoly res_tg(const SolveContext& ctx, const std::array<Rat, 3>& w) {
  auto G = to_dense4(ctx.gradient_form(w));
  if (G.is_zero()) throw std::logic_error("gradient form vanished");
  return num::resultant(to_dense(ctx.tangency_sym), G);
}

// three rational points spanning linf (in mapped coordinates)
std::array<std::array<Rat, 3>, 3> infinity_points(const std::array<Rat, 3>& m) {
  return {std::array<Rat, 3>{m[1], -m[0], Rat(0)},
          std::array<Rat, 3>{m[2], Rat(0), -m[0]},
          std::array<Rat, 3>{Rat(0), m[2], -m[1]}};
}

std::array<Rat, 3> mapped_line(const BitangentSet& set, const ProjLine& linf) {
  ProjLine lm = geom::pull_line(linf, set.ctx->witness);
  return lm.l;
}

// is bt the same line as the mapped linf?
bool is_same_line(const SolveContext& ctx, const Bitangent& bt,
                  const std::array<Rat, 3>& m) {
  // (1, a, b) parallel to (m0, m1, m2): both cross terms vanish
  MultiPoly a = MultiPoly::var(2, 0), b = MultiPoly::var(2, 1);
  MultiPoly c1 = MultiPoly::constant(2, m[1]) - a.scaled(m[0]);
  MultiPoly c2 = MultiPoly::constant(2, m[2]) - b.scaled(m[0]);
  if (ctx.sign_at(bt.alpha, ctx.curve_value(c1)) != 0) return false;
  return ctx.sign_at(bt.alpha, ctx.curve_value(c2)) == 0;
}

// Everything about one line at infinity that is shared across the 28
// bitangents of a set.
struct LineContext {
  std::array<Rat, 3> m;
  CurveValue vm;
  std::array<std::array<Rat, 3>, 3> ws;
  std::array<std::optional<CurveValue>, 3> lw;
  std::array<std::optional<CurveValue>, 3> vg;
};

LineContext make_line_context(const SolveContext& ctx,
                              const std::array<Rat, 3>& m) {
  LineContext lc;
  lc.m = m;
  lc.vm = ctx.curve_value(res_tm(ctx, m));
  lc.ws = infinity_points(m);
  return lc;
}

int qtype_sign_mapped(const BitangentSet& set, const Bitangent& bt,
                      LineContext& lc) {
  const SolveContext& ctx = *set.ctx;
  if (!bt.is_real())
    throw std::invalid_argument("qtype_sign: complex bitangent representative");
  if (is_same_line(ctx, bt, lc.m))
    throw std::invalid_argument("qtype: bitangent equals the line at infinity");
  int sm = ctx.sign_at(bt.alpha, lc.vm);
  if (sm == 0)
    throw ZMeetsInfinity("tangency scheme meets the line at infinity");
  // transverse direction w on linf with l(w) != 0
  MultiPoly a = MultiPoly::var(2, 0), b = MultiPoly::var(2, 1);
  for (int i = 0; i < 3; ++i) {
    const auto& w = lc.ws[i];
    if (sgn(w[0]) == 0 && sgn(w[1]) == 0 && sgn(w[2]) == 0) continue;
    if (!lc.lw[i]) {
      MultiPoly lwp =
          MultiPoly::constant(2, w[0]) + a.scaled(w[1]) + b.scaled(w[2]);
      lc.lw[i] = ctx.curve_value(lwp);
    }
    if (ctx.sign_at(bt.alpha, *lc.lw[i]) == 0) continue;
    if (!lc.vg[i]) lc.vg[i] = ctx.curve_value(res_tg(ctx, w));
    int sg = ctx.sign_at(bt.alpha, *lc.vg[i]);
    if (sg == 0)
      throw std::logic_error("normal derivative vanished at a tangency point");
    return sg * sm;
  }
  throw std::logic_error("no transverse direction on the infinity line");
}

}  // namespace

int qtype_sign(const BitangentSet& set, const Bitangent& bt,
               const ProjLine& linf) {
  LineContext lc = make_line_context(*set.ctx, mapped_line(set, linf));
  return qtype_sign_mapped(set, bt, lc);
}

GWClass qtype(const BitangentSet& set, const Bitangent& bt,
              const ProjLine& linf) {
  return qtype_sign(set, bt, linf) > 0 ? GWClass::plus_one()
                                       : GWClass::minus_one();
}

void check_tangency_hypothesis(const BitangentSet& set, const ProjLine& linf,
                               const std::optional<Rat>& exclude_a) {
  const SolveContext& ctx = *set.ctx;
  auto m = mapped_line(set, linf);
  CurveValue vm = ctx.curve_value(res_tm(ctx, m));
  if (vm.reduced.is_zero())
    throw ZMeetsInfinity("tangency schemes meet the line at infinity");
  PolyZ g = gcd_poly(*ctx.W, vm.reduced);
  if (g.degree() == 0) return;
  if (exclude_a && g.degree() == 1) {
    // g vanishes exactly at the excluded bitangent's chart value
    if (num::eval_rat(g, *exclude_a) == 0) return;
  }
  throw ZMeetsInfinity("a bitangent tangency point lies on the line at infinity");
}

int signed_count(const BitangentSet& set, const ProjLine& linf) {
  check_tangency_hypothesis(set, linf);
  LineContext lc = make_line_context(*set.ctx, mapped_line(set, linf));
  int s = 0;
  for (const auto& bt : set.list)
    if (bt.is_real()) s += qtype_sign_mapped(set, bt, lc) * bt.multiplicity;
  return s;
}

GWClass gw_report(const BitangentSet& set, const ProjLine& linf) {
  check_tangency_hypothesis(set, linf);
  LineContext lc = make_line_context(*set.ctx, mapped_line(set, linf));
  GWClass out;
  for (const auto& bt : set.list) {
    if (!bt.is_real()) continue;
    int s = qtype_sign_mapped(set, bt, lc);
    for (int k = 0; k < bt.multiplicity; ++k)
      out += s > 0 ? GWClass::plus_one() : GWClass::minus_one();
  }
  int pairs = set.complex_pairs();
  for (int k = 0; k < pairs; ++k) out += GWClass::hyperbolic();
  if (out.rank() != set.total_multiplicity)
    throw std::logic_error("GW report rank mismatch");
  return out;
}

GWClass gw_report_excluding(const BitangentSet& set, const ProjLine& linf,
                            const Rat& exclude_a) {
  check_tangency_hypothesis(set, linf, exclude_a);
  LineContext lc = make_line_context(*set.ctx, mapped_line(set, linf));
  GWClass out;
  for (const auto& bt : set.list) {
    if (!bt.is_real()) continue;
    if (bt.alpha.cmp_rat(exclude_a) == 0) continue;
    int s = qtype_sign_mapped(set, bt, lc);
    for (int k = 0; k < bt.multiplicity; ++k)
      out += s > 0 ? GWClass::plus_one() : GWClass::minus_one();
  }
  int pairs = set.complex_pairs();
  for (int k = 0; k < pairs; ++k) out += GWClass::hyperbolic();
  if (out.rank() != set.total_multiplicity - 1)
    throw std::logic_error("GW report rank mismatch (excluding)");
  return out;
}

std::optional<Rat> find_bitangent_chart_value(const BitangentSet& set,
                                              const ProjLine& linf) {
  auto m = mapped_line(set, linf);
  if (sgn(m[0]) == 0) return std::nullopt;  // not in the solver chart
  Rat a = m[1] / m[0], b = m[2] / m[0];
  a.canonicalize();
  b.canonicalize();
  // must be a root of the eliminant with the matching partner value
  if (num::eval_rat(*set.ctx->W, a) != 0) return std::nullopt;
  num::Rat s11v = num::eval_rat(set.ctx->s11, a);
  num::Rat s10v = num::eval_rat(set.ctx->s10, a);
  if (sgn(s11v) == 0) return std::nullopt;
  Rat bb = -s10v / s11v;
  bb.canonicalize();
  if (bb != b) return std::nullopt;
  return a;
}

}  // namespace btg::qtype
