#include "qtype/chart.hpp"

#include <map>

#include "num/polyz.hpp"

namespace btg::qtype {

using num::Dyadic;
using num::MultiPoly;
using solver::CurveValue;
using solver::SolveContext;

namespace {

// tiny dense ternary polynomial with interval coefficients
struct IvTri {
  std::map<std::array<unsigned, 3>, DInterval> t;

  void add(const std::array<unsigned, 3>& m, const DInterval& v) {
    auto it = t.find(m);
    if (it == t.end())
      t[m] = v;
    else
      it->second = it->second + v;
  }
  IvTri mul(const IvTri& o, long prec) const {
    IvTri r;
    for (const auto& [ma, ca] : t)
      for (const auto& [mb, cb] : o.t)
        r.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]},
              (ca * cb).round_out(prec));
    return r;
  }
  DInterval coeff(unsigned i, unsigned j, unsigned k) const {
    auto it = t.find({i, j, k});
    return it == t.end() ? DInterval(0) : it->second;
  }
};

DInterval det3(const std::array<std::array<DInterval, 3>, 3>& m, long prec) {
  auto mul = [&](const DInterval& a, const DInterval& b) {
    return (a * b).round_out(prec);
  };
  return mul(m[0][0], m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         mul(m[0][1], m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         mul(m[0][2], m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

StandardChartData standard_chart(const BitangentSet& set, const Bitangent& bt,
                                 const ProjLine& linf, long prec) {
  const SolveContext& ctx = *set.ctx;
  if (!bt.is_real()) throw std::invalid_argument("standard_chart: complex bitangent");
  auto mline = geom::pull_line(linf, ctx.witness).l;
  for (long p = prec;; p *= 2) {
    if (p > 64 * std::max(ctx.precision_cap, 4096L))
      throw std::runtime_error("standard_chart: undecidable at precision cap");
    bt.alpha.refine_to(p);
    DInterval ia = bt.alpha.interval();
    DInterval ib = ctx.b_interval(bt.alpha, p);
    std::vector<DInterval> pt{ia, ib};
    DInterval A = ctx.tangency_sym[0].eval_interval(pt, p);
    DInterval B = ctx.tangency_sym[1].eval_interval(pt, p);
    DInterval C = ctx.tangency_sym[2].eval_interval(pt, p);
    DInterval mu1 = DInterval::from_rat(mline[1], p) - num::mul_rat(mline[0], ia, p);
    DInterval mu2 = DInterval::from_rat(mline[2], p) - num::mul_rat(mline[0], ib, p);
    // basis form e with (e|_L, m|_L) independent: prefer y2 (needs mu2 != 0)
    int e_choice;
    if (!mu2.contains_zero())
      e_choice = 1;
    else if (!mu1.contains_zero())
      e_choice = 2;
    else
      continue;
    // T' = kappa E^2 + beta E M + gamma M^2 in the chosen basis
    DInterval kappa, beta, gamma;
    if (e_choice == 1) {
      // E = s, M = mu1 s + mu2 t: t = (M - mu1 E)/mu2
      DInterval m2s = (mu2 * mu2).round_out(p);
      kappa = A - DInterval::div((B * mu1).round_out(p), mu2, p) +
              DInterval::div((C * mu1 * mu1).round_out(p), m2s, p);
      beta = DInterval::div(B, mu2, p) -
             DInterval::div((C * mu1).round_out(p) * DInterval(2), m2s, p);
      gamma = DInterval::div(C, m2s, p);
    } else {
      // E = t, M = mu1 s + mu2 t: s = (M - mu2 E)/mu1
      DInterval m1s = (mu1 * mu1).round_out(p);
      kappa = C - DInterval::div((B * mu2).round_out(p), mu1, p) +
              DInterval::div((A * mu2 * mu2).round_out(p), m1s, p);
      beta = DInterval::div(B, mu1, p) -
             DInterval::div((A * mu2).round_out(p) * DInterval(2), m1s, p);
      gamma = DInterval::div(A, m1s, p);
    }
    if (kappa.contains_zero()) {
      // certified nonzero by the qtype hypothesis; needs more precision,
      // unless the hypothesis actually fails
      CurveValue vm = ctx.curve_value([&] {
        auto M2 = ctx.line_form(mline);
        num::DensePoly<MultiPoly> Mp;
        Mp.c = {M2[1], M2[0]};
        Mp.trim();
        num::DensePoly<MultiPoly> Tp;
        Tp.c = {ctx.tangency_sym[2], ctx.tangency_sym[1], ctx.tangency_sym[0]};
        Tp.trim();
        return num::resultant(Tp, Mp);
      }());
      if (ctx.sign_at(bt.alpha, vm) == 0)
        throw ZMeetsInfinity("tangency scheme meets the line at infinity");
      continue;
    }
    // alpha = (4 kappa gamma - beta^2) / (4 kappa^2)
    DInterval k4 = (kappa * kappa).round_out(p) * DInterval(4);
    DInterval alpha =
        DInterval::div((kappa * gamma).round_out(p) * DInterval(4) - (beta * beta).round_out(p), k4, p);
    // chart rows: y1' = (1, a, b); y2' = e + (beta/2kappa) m; y3' = m
    DInterval half_ratio = DInterval::div(beta, kappa * DInterval(2), p);
    StandardChartData out;
    out.prec = p;
    out.alpha = alpha;
    out.map[0] = {DInterval(1), ia, ib};
    for (int j = 0; j < 3; ++j) {
      DInterval ej = DInterval(e_choice == 1 ? (j == 1 ? 1 : 0) : (j == 2 ? 1 : 0));
      out.map[1][j] =
          (ej + (half_ratio * DInterval::from_rat(mline[j], p)).round_out(p));
      out.map[2][j] = DInterval::from_rat(mline[j], p);
    }
    // invert the chart map
    DInterval d = det3(out.map, p);
    if (d.contains_zero()) continue;
    std::array<std::array<DInterval, 3>, 3> inv;
    const auto& mm = out.map;
    auto co = [&](int r, int c) {
      int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      return (mm[r0][c0] * mm[r1][c1] - mm[r0][c1] * mm[r1][c0]).round_out(p);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) inv[i][j] = DInterval::div(co(j, i), d, p);
    // transformed quartic f'' = f_mapped ∘ inv
    std::array<IvTri, 3> lin;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::array<unsigned, 3> mono{0, 0, 0};
        mono[j] = 1;
        lin[i].add(mono, inv[i][j]);
      }
    IvTri f2;
    f2.add({0, 0, 0}, DInterval(0));
    {
      // power tables
      std::array<std::vector<IvTri>, 3> pows;
      for (int i = 0; i < 3; ++i) {
        IvTri one;
        one.add({0, 0, 0}, DInterval(1));
        pows[i] = {one};
        for (int e = 1; e <= 4; ++e)
          pows[i].push_back(pows[i].back().mul(lin[i], p));
      }
      IvTri acc;
      const auto& mons = geom::quartic_monomials();
      const auto& cs = ctx.f_mapped.coeffs();
      for (int n = 0; n < 15; ++n) {
        if (sgn(cs[n]) == 0) continue;
        IvTri term = pows[0][mons[n][0]].mul(pows[1][mons[n][1]], p).mul(
            pows[2][mons[n][2]], p);
        for (const auto& [mono, v] : term.t)
          acc.add(mono, num::mul_rat(cs[n], v, p));
      }
      f2 = acc;
    }
    DInterval scale = f2.coeff(0, 4, 0);
    if (scale.contains_zero()) continue;
    auto nrm = [&](const DInterval& x) { return DInterval::div(x, scale, p); };
    // residual sanity: restriction must be (y2'^2 + alpha y3'^2)^2
    DInterval r1 = nrm(f2.coeff(0, 3, 1));
    DInterval r2 = nrm(f2.coeff(0, 2, 2)) - alpha * DInterval(2);
    DInterval r3 = nrm(f2.coeff(0, 1, 3));
    DInterval r4 = nrm(f2.coeff(0, 0, 4)) - (alpha * alpha).round_out(p);
    if (!r1.contains_zero() || !r2.contains_zero() || !r3.contains_zero() ||
        !r4.contains_zero())
      throw std::logic_error("standard chart residual check failed");
    out.c = {nrm(f2.coeff(1, 3, 0)), nrm(f2.coeff(1, 2, 1)),
             nrm(f2.coeff(1, 1, 2)), nrm(f2.coeff(1, 0, 3))};
    return out;
  }
}

LocalIndexData local_index_data(const StandardChartData& d) {
  long p = d.prec;
  const DInterval &al = d.alpha, &c130 = d.c[0], &c121 = d.c[1], &c112 = d.c[2],
                  &c103 = d.c[3];
  auto m = [&](const DInterval& x, const DInterval& y) {
    return (x * y).round_out(p);
  };
  std::array<std::array<DInterval, 4>, 4> J{{
      {-c121, m(c130, al) * DInterval(2) - c112, -c103, m(c130, m(al, al))},
      {-c130, -c121, -c112, -c103},
      {DInterval(-2), DInterval(0), m(DInterval(-2), al), DInterval(0)},
      {DInterval(0), DInterval(-2), DInterval(0), m(DInterval(-2), al)},
  }};
  // 4x4 determinant by cofactor expansion over the intervals
  auto det3x3 = [&](std::array<std::array<DInterval, 3>, 3> a) {
    return m(a[0][0], m(a[1][1], a[2][2]) - m(a[1][2], a[2][1])) -
           m(a[0][1], m(a[1][0], a[2][2]) - m(a[1][2], a[2][0])) +
           m(a[0][2], m(a[1][0], a[2][1]) - m(a[1][1], a[2][0]));
  };
  DInterval det(0);
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<DInterval, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = J[r][c];
      }
    }
    DInterval t = m(J[0][j], det3x3(minor));
    det = (j % 2 == 0) ? det + t : det - t;
  }
  LocalIndexData out;
  out.det_j = det;
  DInterval al2 = m(al, al), al3 = m(al2, al);
  out.rhs = m(al3, m(c130, c130)) +
            m(al2, m(c121, c121) - m(c130, c112) * DInterval(2)) +
            m(al, m(c112, c112) - m(c103, c121) * DInterval(2)) +
            m(c103, c103);
  // the determinant identity must hold within the enclosures
  DInterval diff = out.det_j - out.rhs * DInterval(4);
  if (!diff.contains_zero())
    throw std::logic_error("local index: det J != 4*rhs within intervals");
  out.sign = out.det_j.sign().value_or(0);
  return out;
}

GWClass local_index(const BitangentSet& set, const Bitangent& bt,
                    const ProjLine& linf) {
  for (long p = 192;; p *= 2) {
    if (p > 64 * std::max(set.ctx->precision_cap, 4096L))
      throw std::runtime_error("local_index: zero determinant (non-simple zero?)");
    StandardChartData d = standard_chart(set, bt, linf, p);
    LocalIndexData li = local_index_data(d);
    if (li.sign > 0) return GWClass::plus_one();
    if (li.sign < 0) return GWClass::minus_one();
  }
}

std::pair<Rat, Rat> local_index_exact(const Rat& alpha,
                                      const std::array<Rat, 4>& c) {
  const Rat &c130 = c[0], &c121 = c[1], &c112 = c[2], &c103 = c[3];
  std::array<std::array<Rat, 4>, 4> J{{
      {-c121, Rat(2) * c130 * alpha - c112, -c103, c130 * alpha * alpha},
      {-c130, -c121, -c112, -c103},
      {Rat(-2), Rat(0), Rat(-2) * alpha, Rat(0)},
      {Rat(0), Rat(-2), Rat(0), Rat(-2) * alpha},
  }};
  // exact 4x4 determinant
  Rat det(0);
  auto det3x3 = [&](std::array<std::array<Rat, 3>, 3> a) -> Rat {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<Rat, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int col = 0; col < 4; ++col) {
        if (col == j) continue;
        minor[r - 1][cc++] = J[r][col];
      }
    }
    Rat t = J[0][j] * det3x3(minor);
    det += (j % 2 == 0) ? t : -t;
  }
  Rat rhs = alpha * alpha * alpha * c130 * c130 +
            alpha * alpha * (c121 * c121 - Rat(2) * c130 * c112) +
            alpha * (c112 * c112 - Rat(2) * c103 * c121) + c103 * c103;
  return {det, rhs};
}

}  // namespace btg::qtype
