#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "num/aberth.hpp"
#include "num/algebraic.hpp"
#include "num/dyadic.hpp"
#include "num/multipoly.hpp"
#include "num/poly.hpp"
#include "num/polyz.hpp"

using namespace btg::num;

namespace {

PolyZ zpoly(std::initializer_list<long> cs) {
  PolyZ p;
  for (long c : cs) p.c.emplace_back(c);
  p.trim();
  return p;
}

MultiPoly mono(int ar, std::vector<unsigned> e, long num, long den = 1) {
  MultiPoly p(ar);
  p.add_term(e, Rat(num, den));
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_to_string(*parse_rat("2/4")) == "1/2");
  CHECK(rat_to_string(*parse_rat("-6/3")) == "-2");
  CHECK(!parse_rat("1/0").has_value());
  CHECK(!parse_rat("x").has_value());
  CHECK(!parse_rat("1/ 2").has_value());
}

TEST_CASE("dyadic arithmetic and rounding") {
  Dyadic a(Int(3), -2);   // 0.75
  Dyadic b(Int(-5), -3);  // -0.625
  CHECK((a + b).to_rat() == Rat(1, 8));
  CHECK((a * b).to_rat() == Rat(-15, 32));
  CHECK(cmp(a, b) > 0);
  Dyadic t(Int(1), -10);
  CHECK(t.round_down(4).to_rat() == Rat(0));
  CHECK(t.round_up(4).to_rat() == Rat(1, 16));

  DInterval x = DInterval::from_rat(Rat(1, 3), 20);
  CHECK(x.contains(Rat(1, 3)));
  CHECK(x.width() <= Dyadic(Int(1), -19));
  DInterval q = DInterval::div(DInterval(1), DInterval::from_rat(Rat(3), 10), 30);
  CHECK(q.contains(Rat(1, 3)));
  DInterval s = DInterval::from_rat(Rat(2), 10).sqrt(40);
  Rat lo = s.lo.to_rat(), hi = s.hi.to_rat();
  CHECK(lo * lo <= Rat(2));
  CHECK(hi * hi >= Rat(2));
}

TEST_CASE("resultant basics") {
  // res(x-1, x+1) = 2
  PolyZ p = zpoly({-1, 1}), q = zpoly({1, 1});
  CHECK(resultant(p, q) == Int(2));
  // res(x^2+bx+c, 2x+b) = 4c - b^2 (classical discriminant identity)
  MultiPoly b = MultiPoly::var(3, 1), c = MultiPoly::var(3, 2);
  MultiPoly x2 = MultiPoly::var(3, 0, 2), x = MultiPoly::var(3, 0);
  MultiPoly P = x2 + b * x + c;
  MultiPoly Q = x.scaled(Rat(2)) + b;
  MultiPoly R = resultant(P, Q, 0);
  MultiPoly expect = c.scaled(Rat(4)) - b * b;
  CHECK(R == expect);
  // common root: res(x - t, x^2 - t^2, x) vanishes identically
  MultiPoly t = MultiPoly::var(2, 1), xx = MultiPoly::var(2, 0);
  MultiPoly r0 = resultant(xx - t, xx * xx - t * t, 0);
  CHECK(r0.is_zero());
  CHECK_THROWS(resultant(t, t * t, 0));  // degree 0 in x: nothing to eliminate
}

TEST_CASE("resultant multiplicativity on products") {
  std::mt19937_64 rng(7);
  auto rnd_poly = [&](int deg) {
    PolyZ p;
    for (int i = 0; i <= deg; ++i)
      p.c.emplace_back(static_cast<long>(rng() % 13) - 6);
    p.trim();
    if (p.is_zero() || p.degree() < deg) p.c = {Int(1), Int(2), Int(1)};
    return p;
  };
  for (int it = 0; it < 24; ++it) {
    PolyZ p = rnd_poly(2 + static_cast<int>(rng() % 3));
    PolyZ q = rnd_poly(1 + static_cast<int>(rng() % 3));
    PolyZ r = rnd_poly(1 + static_cast<int>(rng() % 2));
    CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
  }
}

TEST_CASE("gcd / squarefree") {
  PolyZ a = zpoly({-1, 0, 1});          // x^2-1
  PolyZ b = zpoly({1, 2, 1});           // (x+1)^2
  PolyZ g = gcd_poly(a, b);
  CHECK(g.degree() == 1);
  CHECK(eval_rat(g, Rat(-1)) == 0);
  PolyZ sq = zpoly({1, 2, 1});
  CHECK(squarefree_part(sq).degree() == 1);
  auto dec = squarefree_decomposition(zpoly({0, 0, 1}) * zpoly({-1, 1}) * zpoly({-1, 1}) * zpoly({-1, 1}));
  // x^2 (x-1)^3
  bool saw2 = false, saw3 = false;
  for (auto& [f, m] : dec) {
    if (m == 2) saw2 = f.degree() == 1;
    if (m == 3) saw3 = f.degree() == 1;
  }
  CHECK(saw2);
  CHECK(saw3);
}

TEST_CASE("real root isolation: basic and fixtures") {
  // x^2 - 2
  {
    auto roots = isolate_real_roots_mult(to_rat_poly(zpoly({-2, 0, 1})), 20);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first.contains(Rat(0)) == false);
    DInterval r = roots[1].first;
    Rat lo = r.lo.to_rat(), hi = r.hi.to_rat();
    CHECK(lo * lo <= Rat(2));
    CHECK(hi * hi >= Rat(2));
    CHECK(r.width() <= Dyadic(Int(1), -20));
  }
  // (x-1)^2: one root, multiplicity 2
  {
    auto roots = isolate_real_roots_mult(to_rat_poly(zpoly({1, -2, 1})), 20);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].second == 2);
    CHECK(roots[0].first.contains(Rat(1)));
  }
  // rational roots hit exactly
  {
    PolyZ p = zpoly({0, 1}) * zpoly({-1, 2}) * zpoly({3, 2});
    auto roots = isolate_real_roots(primitive_part(p));
    REQUIRE(roots.size() == 3);
  }
}

TEST_CASE("root isolation completeness on random products of linears") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rat> roots;
    PolyZ p = zpoly({1});
    int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 7);
      Rat r(num, den);
      r.canonicalize();
      roots.push_back(r);
      p = p * zpoly({-num, den});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto found = isolate_real_roots_mult(to_rat_poly(p), 30);
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
      CHECK(found[i].first.contains(roots[i]));
  }
}

TEST_CASE("refine_root") {
  PolyZ p = zpoly({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  DInterval r = refine_root(p, roots[1].iv, 60);
  CHECK(r.width() <= Dyadic(Int(1), -60));
  Rat lo = r.lo.to_rat(), hi = r.hi.to_rat();
  CHECK(lo * lo <= Rat(2));
  CHECK(hi * hi >= Rat(2));
  CHECK(sign_at(p, r.lo) * sign_at(p, r.hi) < 0);
  // x^3 - x on [0.5, 1.5] contains 1
  PolyZ q = zpoly({0, -1, 0, 1});
  DInterval iv(Dyadic(Int(1), -1), Dyadic(Int(3), -1));
  DInterval rr = refine_root(q, iv, 40);
  CHECK(rr.contains(Rat(1)));
  CHECK_THROWS(refine_root(q, DInterval(Dyadic(Int(5), 0), Dyadic(Int(6), 0)), 10));
}

TEST_CASE("algebraic sign engine") {
  auto w = std::make_shared<PolyZ>(zpoly({-2, 0, 1}));  // x^2-2
  auto roots = isolate_real_roots(*w);
  AlgebraicReal sqrt2(w, roots[1]);
  // sign of (x^2 - 2) at sqrt2 is exactly zero
  CHECK(sqrt2.sign_of(zpoly({-2, 0, 1})) == 0);
  CHECK(sqrt2.sign_of(zpoly({0, 1})) > 0);        // x > 0
  CHECK(sqrt2.sign_of(zpoly({-3, 0, 2})) > 0);    // 2x^2-3 > 0 at sqrt2
  CHECK(sqrt2.sign_of(zpoly({3, 0, -2})) < 0);
  CHECK(sqrt2.cmp_rat(Rat(3, 2)) < 0);
  CHECK(sqrt2.cmp_rat(Rat(7, 5)) > 0);
  // multiple of the defining polynomial is zero too
  CHECK(sqrt2.sign_of(zpoly({-2, 0, 1}) * zpoly({5, 3})) == 0);
}

TEST_CASE("complex root clusters") {
  // x^2 + 1
  {
    auto roots = complex_root_clusters(zpoly({1, 0, 1}), 50, 0);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].re.to_double() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(roots[0].im.to_double() == doctest::Approx(-1.0));
    CHECK(roots[1].im.to_double() == doctest::Approx(1.0));
    // conjugate closure is exact
    CHECK(cmp(roots[0].im, -roots[1].im) == 0);
    CHECK(cmp(roots[0].re, roots[1].re) == 0);
  }
  // x^4 - 1 -> 1, -1, i, -i
  {
    auto roots = complex_root_clusters(zpoly({-1, 0, 0, 0, 1}), 50, 1);
    REQUIRE(roots.size() == 4);
    int reals = 0, imags = 0;
    for (auto& r : roots) {
      if (r.im.is_zero()) ++reals;
      if (r.re.to_double() == doctest::Approx(0.0).epsilon(1e-9)) ++imags;
    }
    CHECK(reals == 2);
    CHECK(imags == 2);
  }
  // multiplicities sum to degree
  {
    PolyZ p = zpoly({1, 2, 1}) * zpoly({1, 0, 1});  // (x+1)^2 (x^2+1)
    auto roots = complex_root_clusters(p, 40, 2);
    int tot = 0;
    for (auto& r : roots) tot += r.multiplicity;
    CHECK(tot == 4);
  }
}

TEST_CASE("multipoly substitution and evaluation") {
  // f(x,y) = x^2 y + 3, substitute x -> s+t, y -> s
  MultiPoly f = mono(2, {2, 1}, 1) + mono(2, {0, 0}, 3);
  MultiPoly s = MultiPoly::var(2, 0), t = MultiPoly::var(2, 1);
  MultiPoly g = f.subst({s + t, s});
  CHECK(g.eval({Rat(1), Rat(2)}) == Rat(1 * 9 + 3 * 1));  // (1+2)^2*1+3 = 12
  CHECK(f.derivative(0).eval({Rat(2), Rat(5)}) == Rat(20));
  auto sg = sign_at_point(f, std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(sg == Sign::positive);
  std::vector<DInterval> pt{DInterval::from_rat(Rat(1, 3), 30),
                            DInterval::from_rat(Rat(-1, 7), 30)};
  CHECK(sign_at_point(f, pt) == Sign::positive);
  // straddling point -> unknown for a sign-changing polynomial
  MultiPoly id = MultiPoly::var(1, 0);
  std::vector<DInterval> z{DInterval(Dyadic(Int(-1), -3), Dyadic(Int(1), -3))};
  CHECK(sign_at_point(id, z) == Sign::unknown);
}

TEST_CASE("subresultant chain matches direct elimination") {
  // chain on (x^2 - 2, x^2 - x): res = val at common-structure
  PolyZ a = zpoly({-2, 0, 1}), b = zpoly({0, -1, 1});
  Int r = resultant(a, b);
  // res = prod over roots of a of b(root) * lc^... : b(s)b(-s) with s=sqrt2:
  // (2 - s)(2 + s) ... direct: res(x^2-2, x^2-x) = ?
  // roots of b: 0,1 -> res = lc(b)^2 * a(0)*a(1) = (-2)*(-1) = 2
  CHECK(r == Int(2));
}
