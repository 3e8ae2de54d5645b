#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geom/quartic.hpp"
#include "tests/fixtures.hpp"

using namespace btg;
using namespace btg::geom;
using num::Rat;

TEST_CASE("monomial order is descending graded-lex") {
  const auto& m = quartic_monomials();
  CHECK(m[0] == std::array<unsigned, 3>{4, 0, 0});
  CHECK(m[1] == std::array<unsigned, 3>{3, 1, 0});
  CHECK(m[4] == std::array<unsigned, 3>{2, 1, 1});
  CHECK(m[14] == std::array<unsigned, 3>{0, 0, 4});
}

TEST_CASE("restriction to coordinate and generic lines") {
  Quartic fermat = fixtures::fermat();
  // L = V(y1): chart pivot 0, restriction y2^4 + y3^4
  BinaryQuartic b = restrict_to_line(fermat, ProjLine(Rat(1), Rat(0), Rat(0)));
  CHECK(b.c[4] == Rat(1));
  CHECK(b.c[0] == Rat(1));
  CHECK(b.c[1] == Rat(0));
  CHECK(b.c[2] == Rat(0));
  CHECK(b.c[3] == Rat(0));

  Quartic trott = fixtures::trott();
  BinaryQuartic tz = restrict_to_line(trott, ProjLine(Rat(0), Rat(0), Rat(1)));
  // 144 (x^4 + y^4) + 350 x^2 y^2
  CHECK(tz.c[4] == Rat(144));
  CHECK(tz.c[0] == Rat(144));
  CHECK(tz.c[2] == Rat(350));
  CHECK(tz.c[1] == Rat(0));
  CHECK(tz.c[3] == Rat(0));
}

TEST_CASE("restriction matches direct expansion at random charts") {
  std::mt19937_64 rng(11);
  Quartic f = fixtures::trott();
  for (int it = 0; it < 20; ++it) {
    Rat a(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 5));
    Rat bb(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 5));
    a.canonicalize();
    bb.canonicalize();
    ProjLine L(Rat(1), a, bb);
    BinaryQuartic q = restrict_to_line(f, L);
    // oracle: evaluate both sides at several parameter values
    for (long sv = -3; sv <= 3; ++sv) {
      Rat s(sv), t(1);
      std::array<Rat, 3> pt;
      for (int i = 0; i < 3; ++i) pt[i] = s * q.basis[0][i] + t * q.basis[1][i];
      Rat direct = f.eval(pt[0], pt[1], pt[2]);
      Rat via(0);
      for (int k = 4; k >= 0; --k) via = via * s + q.c[k];  // t = 1
      CHECK(direct == via);
    }
  }
}

TEST_CASE("apply_map is a group action") {
  Quartic f = fixtures::fermat();
  ProjectiveMap id = ProjectiveMap::identity();
  CHECK(apply_map(f, id) == f);
  // coordinate permutation fixes the Fermat quartic
  std::array<std::array<Rat, 3>, 3> perm{};
  perm[0][1] = Rat(1);
  perm[1][2] = Rat(1);
  perm[2][0] = Rat(1);
  CHECK(apply_map(f, ProjectiveMap(perm)) == f);
  // round trip through a random map
  std::mt19937_64 rng(3);
  for (int it = 0; it < 5; ++it) {
    ProjectiveMap g = random_map(rng);
    Quartic t = fixtures::trott();
    CHECK(apply_map(apply_map(t, g), g.inverse()) == t);
    // action property: apply_map(f, g h) = apply_map(apply_map(f, h), g)
    ProjectiveMap h = random_map(rng);
    CHECK(apply_map(t, g.compose(h)) == apply_map(apply_map(t, h), g));
  }
}

TEST_CASE("smoothness certificates") {
  CHECK(is_smooth(fixtures::fermat()));
  CHECK(is_smooth(fixtures::trott()));
  CHECK(is_smooth(fixtures::one_oval()));
  CHECK(is_smooth(fixtures::two_nested()));
  CHECK(is_smooth(fixtures::two_ovals()));
  CHECK(is_smooth(fixtures::three_ovals()));
  // non-reduced: (y1^2 + y2^2)^2
  {
    num::MultiPoly c = num::MultiPoly::var(3, 0, 2) + num::MultiPoly::var(3, 1, 2);
    CHECK(!is_smooth(Quartic::from_multipoly(c * c)));
  }
  // reduced with a node: (x^2+y^2)^2 - x^2 z^2
  {
    num::MultiPoly c = num::MultiPoly::var(3, 0, 2) + num::MultiPoly::var(3, 1, 2);
    num::MultiPoly xz = num::MultiPoly::var(3, 0) * num::MultiPoly::var(3, 2);
    CHECK(!is_smooth(Quartic::from_multipoly(c * c - xz * xz)));
  }
  // cone over a binary quartic
  {
    num::MultiPoly g = num::MultiPoly::var(3, 1, 4) + num::MultiPoly::var(3, 2, 4);
    CHECK(!is_smooth(Quartic::from_multipoly(g)));
  }
}

TEST_CASE("real points on a line") {
  CHECK(real_points_on_line(fixtures::trott(), ProjLine(Rat(0), Rat(0), Rat(1))) == 0);
  CHECK(real_points_on_line(fixtures::fermat(), ProjLine(Rat(1), Rat(2), Rat(-3))) == 0);
  // the one-oval quartic meets a generic real line
  CHECK(real_points_on_line(fixtures::one_oval(), ProjLine(Rat(0), Rat(0), Rat(1))) == 0);
  CHECK(real_points_on_line(fixtures::one_oval(), ProjLine(Rat(1), Rat(0), Rat(0))) == 2);
  // scaling invariance
  Quartic t = fixtures::trott();
  std::array<Rat, 15> cs = t.coeffs();
  for (auto& c : cs) c *= Rat(-7, 3);
  CHECK(real_points_on_line(Quartic(cs), ProjLine(Rat(1), Rat(0), Rat(0))) ==
        real_points_on_line(t, ProjLine(Rat(1), Rat(0), Rat(0))));
  // line contained in the curve
  num::MultiPoly y1 = num::MultiPoly::var(3, 0);
  num::MultiPoly cub = num::MultiPoly::var(3, 1, 3) + num::MultiPoly::var(3, 2, 3);
  CHECK_THROWS(real_points_on_line(Quartic::from_multipoly(y1 * cub),
                                   ProjLine(Rat(1), Rat(0), Rat(0))));
}

TEST_CASE("real flex counts") {
  CHECK(real_flex_count(fixtures::trott()) == 8);
  CHECK(real_flex_count(fixtures::fermat()) == 0);
}
