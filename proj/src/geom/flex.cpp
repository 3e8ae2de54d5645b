#include <stdexcept>

#include "geom/quartic.hpp"
#include "num/polyz.hpp"

namespace btg::geom {

using num::gcd_poly;
using num::isolate_real_roots;
using num::MultiPoly;
using num::PolyZ;
using num::squarefree_part;
using num::to_primitive_int;

namespace {

MultiPoly hessian(const MultiPoly& p) {
  std::array<std::array<MultiPoly, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = p.derivative(i).derivative(j);
  MultiPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                  h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                  h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return det;
}

PolyZ dehom_y2(const MultiPoly& bin) {  // binary form in (y1, y2) at y2 = 1
  num::PolyQ p;
  int d = bin.degree_in(0);
  p.c.assign(d + 1, num::Rat(0));
  for (const auto& [m, c] : bin.terms()) p.c[m[0]] = c;
  p.trim();
  return to_primitive_int(p);
}

}  // namespace

int real_flex_count(const Quartic& f, std::uint64_t seed) {
  if (!is_smooth(f, seed)) throw std::domain_error("real_flex_count requires a smooth quartic");
  std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Quartic fc = attempt == 0 ? f : substitute(f, random_map(rng));
    MultiPoly p = fc.poly();
    MultiPoly H = hessian(p);
    // projection center [0,0,1] must avoid both curves
    if (sgn(p.eval({num::Rat(0), num::Rat(0), num::Rat(1)})) == 0) continue;
    if (sgn(H.eval({num::Rat(0), num::Rat(0), num::Rat(1)})) == 0) continue;
    auto P = p.as_univariate(2);
    auto Q = H.as_univariate(2);
    auto chain = num::subresultant_chain_indexed(Q, P);  // deg 6 >= 4 in y3
    if (chain.empty()) continue;
    MultiPoly res =
        chain.back().poly.degree() == 0 ? chain.back().poly.lc() : MultiPoly(3);
    if (res.is_zero()) continue;
    PolyZ R24 = dehom_y2(res);
    if (R24.degree() != 24) continue;  // flex direction at [1:0]: re-randomize
    PolyZ W = squarefree_part(R24);
    // exactly one intersection point over each direction: the index-1
    // principal subresultant coefficient must not vanish at any root of W
    MultiPoly psc1(3);
    for (const auto& S : chain)
      if (S.index == 1 && S.poly.degree() == 1) psc1 = S.poly.lc();
    if (psc1.is_zero()) continue;
    if (gcd_poly(W, dehom_y2(psc1)).degree() != 0) continue;
    return static_cast<int>(isolate_real_roots(W).size());
  }
  throw std::runtime_error("real_flex_count: no generic projection found");
}

}  // namespace btg::geom
