#pragma once

#include "qtype/qtype.hpp"

namespace btg::qtype {

using num::DInterval;

// Coordinates in which the infinity line is V(y3'), the bitangent is V(y1')
// and the tangency scheme is V(y2'^2 + alpha y3'^2); the quartic rescaled so
// its restriction to the bitangent is exactly (y2'^2 + alpha y3'^2)^2.
struct StandardChartData {
  std::array<std::array<DInterval, 3>, 3> map;  // rows y1', y2', y3'
  DInterval alpha;
  std::array<DInterval, 4> c;  // c130, c121, c112, c103
  long prec = 0;
};

// Chart at the given working precision (certified enclosures). Throws
// ZMeetsInfinity when the tangency scheme meets linf.
StandardChartData standard_chart(const BitangentSet& set, const Bitangent& bt,
                                 const ProjLine& linf, long prec = 192);

// Local index data computed from a chart: the 4x4 Jacobian determinant and
// the cubic expression it must equal four times.
struct LocalIndexData {
  DInterval det_j;
  DInterval rhs;
  int sign = 0;  // 0 when undecided at this precision
};
LocalIndexData local_index_data(const StandardChartData& d);

// <sign det J>; refines the chart until the sign is certified. Throws on a
// certified-zero determinant (non-simple zero).
GWClass local_index(const BitangentSet& set, const Bitangent& bt,
                    const ProjLine& linf);

// Exact evaluation of the Jacobian determinant and of the closed-form
// right-hand side at rational chart data; the two must satisfy det = 4*rhs
// identically.
std::pair<Rat, Rat> local_index_exact(const Rat& alpha,
                                      const std::array<Rat, 4>& c);

}  // namespace btg::qtype
