#pragma once

#include "geom/quartic.hpp"

// Named quartics used across the test suites. Mirrors the library's built-in
// corpus (io/corpusfile.cpp) but kept independent so the tests do not trust
// the code under test for their own inputs.
namespace fixtures {

using btg::geom::Quartic;
using btg::num::MultiPoly;
using btg::num::Rat;

inline MultiPoly v(int i, unsigned p = 1) { return MultiPoly::var(3, i, p); }

// 144 (x^4 + y^4) - 225 (x^2 + y^2) z^2 + 350 x^2 y^2 + 81 z^4
inline Quartic trott() {
  MultiPoly f = (v(0, 4) + v(1, 4)).scaled(Rat(144)) -
                ((v(0, 2) + v(1, 2)) * v(2, 2)).scaled(Rat(225)) +
                (v(0, 2) * v(1, 2)).scaled(Rat(350)) + v(2, 4).scaled(Rat(81));
  return Quartic::from_multipoly(f);
}

inline Quartic fermat() {
  return Quartic::from_multipoly(v(0, 4) + v(1, 4) + v(2, 4));
}

inline Quartic one_oval() {
  return Quartic::from_multipoly(v(0, 4) + v(1, 4) - v(2, 4));
}

// (x^2+y^2-z^2)(x^2+y^2-4z^2) + x^4/10: two nested ovals
inline Quartic two_nested() {
  MultiPoly c1 = v(0, 2) + v(1, 2) - v(2, 2);
  MultiPoly c2 = v(0, 2) + v(1, 2) - v(2, 2).scaled(Rat(4));
  return Quartic::from_multipoly(c1 * c2 + v(0, 4).scaled(Rat(1, 10)));
}

// ((x-2z)^2+y^2-z^2)((x+2z)^2+y^2-z^2) - y^4/64: two disjoint ovals
inline Quartic two_ovals() {
  MultiPoly xm = v(0) - v(2).scaled(Rat(2));
  MultiPoly xp = v(0) + v(2).scaled(Rat(2));
  MultiPoly c1 = xm * xm + v(1, 2) - v(2, 2);
  MultiPoly c2 = xp * xp + v(1, 2) - v(2, 2);
  return Quartic::from_multipoly(c1 * c2 - v(1, 4).scaled(Rat(1, 64)));
}

// trott + 30 (x^2 + y z - 81/100 z^2)^2: three ovals
inline Quartic three_ovals() {
  MultiPoly con = v(0, 2) + v(1) * v(2) - v(2, 2).scaled(Rat(81, 100));
  return Quartic::from_multipoly(trott().poly() + (con * con).scaled(Rat(30)));
}

}  // namespace fixtures
