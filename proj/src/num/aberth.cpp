#include "num/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace btg::num {

using CDy = DyComplex;

DyComplex cx_add(const DyComplex& a, const DyComplex& b, long prec) {
  return {(a.re + b.re).round_down(prec), (a.im + b.im).round_down(prec)};
}
DyComplex cx_sub(const DyComplex& a, const DyComplex& b, long prec) {
  return {(a.re - b.re).round_down(prec), (a.im - b.im).round_down(prec)};
}
DyComplex cx_mul(const DyComplex& a, const DyComplex& b, long prec) {
  Dyadic re = a.re * b.re - a.im * b.im;
  Dyadic im = a.re * b.im + a.im * b.re;
  return {re.round_down(prec), im.round_down(prec)};
}

namespace {
Dyadic div_round(const Dyadic& a, const Dyadic& b, long prec) {
  Int num = a.man, den = b.man;
  long e = a.exp - b.exp + prec;
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), e);
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -e);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -prec);
}
}  // namespace

DyComplex cx_div(const DyComplex& a, const DyComplex& b, long prec) {
  Dyadic n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw std::runtime_error("complex division by zero");
  Dyadic re = a.re * b.re + a.im * b.im;
  Dyadic im = a.im * b.re - a.re * b.im;
  return {div_round(re, n, prec), div_round(im, n, prec)};
}

DyComplex cx_poly_eval(const PolyZ& p, const DyComplex& z, long prec) {
  DyComplex acc{Dyadic(), Dyadic()};
  for (int i = p.degree(); i >= 0; --i)
    acc = cx_add(cx_mul(acc, z, prec), {Dyadic(p.c[i], 0), Dyadic()}, prec);
  return acc;
}

namespace {

Dyadic cnorm2(const CDy& a) { return a.re * a.re + a.im * a.im; }

CDy cadd(const CDy& a, const CDy& b, long prec) { return cx_add(a, b, prec); }
CDy csub(const CDy& a, const CDy& b, long prec) { return cx_sub(a, b, prec); }
CDy cmul(const CDy& a, const CDy& b, long prec) { return cx_mul(a, b, prec); }
CDy cdiv(const CDy& a, const CDy& b, long prec) { return cx_div(a, b, prec); }

CDy eval_poly(const std::vector<CDy>& coef, const CDy& z, long prec) {
  CDy acc = coef.back();
  for (int i = static_cast<int>(coef.size()) - 2; i >= 0; --i)
    acc = cadd(cmul(acc, z, prec), coef[i], prec);
  return acc;
}

std::vector<CDy> aberth_squarefree(const PolyZ& p, long tol_prec,
                                   std::uint64_t seed, int iter_cap) {
  int n = p.degree();
  std::vector<CDy> roots(n);
  // initial points on a perturbed circle
  double rad = 0.0;
  {
    double lc = std::abs(p.lc().get_d());
    for (int i = 0; i < n; ++i) {
      double q = std::abs(p.c[i].get_d()) / lc;
      double cand = 2.0 * std::pow(q, 1.0 / (n - i));
      rad = std::max(rad, cand);
    }
    if (!(rad > 1e-12) || !std::isfinite(rad)) rad = 1.0;
    if (rad > 1e12) rad = 1e12;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jit(-0.5, 0.5);
  long prec = std::max(96L, tol_prec + 64);
  auto mk = [&](double v) { return Dyadic::from_rat_down(Rat(v), prec); };
  for (int i = 0; i < n; ++i) {
    double th = 2.0 * M_PI * (i + 0.3837) / n + 0.01 * jit(rng);
    roots[i] = {mk(rad * std::cos(th)), mk(rad * std::sin(th))};
  }

  Dyadic tol(Int(1), -tol_prec);
  Dyadic tol2 = tol * tol;
  PolyZ dp = p.derivative();
  for (int escalate = 0; escalate < 4; ++escalate) {
    std::vector<CDy> pc, dc;
    for (const auto& c : p.c) pc.push_back({Dyadic(c, 0), Dyadic()});
    for (const auto& c : dp.c) dc.push_back({Dyadic(c, 0), Dyadic()});
    for (int it = 0; it < iter_cap; ++it) {
      bool all_ok = true;
      for (int i = 0; i < n; ++i) {
        CDy pv = eval_poly(pc, roots[i], prec);
        if (cnorm2(pv) <= tol2 || (pv.re.is_zero() && pv.im.is_zero())) continue;
        all_ok = false;
        CDy dv = eval_poly(dc, roots[i], prec);
        if (dv.re.is_zero() && dv.im.is_zero()) {
          roots[i].re = (roots[i].re + Dyadic(Int(1), -7 - it % 13)).round_down(prec);
          continue;
        }
        CDy w = cdiv(pv, dv, prec);
        CDy S{Dyadic(), Dyadic()};
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          CDy d = csub(roots[i], roots[j], prec);
          if (d.re.is_zero() && d.im.is_zero()) {
            d.re = Dyadic(Int(1), -prec / 2);
          }
          S = cadd(S, cdiv({Dyadic(Int(1), 0), Dyadic()}, d, prec), prec);
        }
        CDy denom = csub({Dyadic(Int(1), 0), Dyadic()}, cmul(w, S, prec), prec);
        CDy corr = (denom.re.is_zero() && denom.im.is_zero()) ? w : cdiv(w, denom, prec);
        roots[i] = csub(roots[i], corr, prec);
      }
      if (all_ok) {
        // conjugate symmetrization: pair roots with their conjugates
        std::vector<bool> used(n, false);
        for (int i = 0; i < n; ++i) {
          if (used[i]) continue;
          if (cmp(roots[i].im * roots[i].im, tol2) <= 0) {
            roots[i].im = Dyadic();
            used[i] = true;
            continue;
          }
          int best = -1;
          Dyadic bd;
          for (int j = 0; j < n; ++j) {
            if (j == i || used[j]) continue;
            CDy d{roots[i].re - roots[j].re, roots[i].im + roots[j].im};
            Dyadic nn = cnorm2(d);
            if (best < 0 || nn < bd) {
              best = j;
              bd = nn;
            }
          }
          if (best < 0) {
            roots[i].im = Dyadic();
            used[i] = true;
            continue;
          }
          Dyadic re = Dyadic((roots[i].re + roots[best].re).man,
                             (roots[i].re + roots[best].re).exp - 1);
          Dyadic im = Dyadic((roots[i].im - roots[best].im).man,
                             (roots[i].im - roots[best].im).exp - 1);
          roots[i] = {re, im};
          roots[best] = {re, -im};
          used[i] = used[best] = true;
        }
        return roots;
      }
    }
    prec *= 2;
    for (auto& z : roots) {
      z.re = z.re.round_down(prec);
      z.im = z.im.round_down(prec);
    }
  }
  throw std::runtime_error(
      "Aberth iteration did not reach the requested residual (degree " +
      std::to_string(n) + ")");
}

}  // namespace

std::vector<ComplexRoot> complex_root_clusters(const PolyZ& p, long tol_prec,
                                               std::uint64_t seed,
                                               int iter_cap) {
  if (p.is_zero())
    throw std::invalid_argument("complex_root_clusters: zero polynomial");
  std::vector<ComplexRoot> out;
  if (p.degree() == 0) return out;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    auto roots = aberth_squarefree(f, tol_prec, seed, iter_cap);
    for (const auto& z : roots) out.push_back({z.re, z.im, mult});
  }
  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (cmp(a.re, b.re) != 0) return cmp(a.re, b.re) < 0;
    return cmp(a.im, b.im) < 0;
  });
  return out;
}

}  // namespace btg::num
