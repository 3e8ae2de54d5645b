#include <stdexcept>
#include <vector>

#include "geom/quartic.hpp"
#include "num/polyz.hpp"

namespace btg::geom {

using num::Int;
using num::PolyZ;

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Int(1);
  Int sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a[k][k]) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (sgn(a[r][k]) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Int(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::array<unsigned, 3>> monomials_of_degree(unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j + i <= d; ++j) out.push_back({i, j, d - i - j});
  return out;
}

// Macaulay matrix for three ternary cubics at critical degree 7; returns
// (numerator det, denominator det). Res = num/den whenever den != 0.
std::pair<Int, Int> macaulay_dets(const std::array<num::MultiPoly, 3>& g) {
  auto mons7 = monomials_of_degree(7);
  auto index_of = [&](const std::array<unsigned, 3>& m) {
    for (std::size_t i = 0; i < mons7.size(); ++i)
      if (mons7[i] == m) return static_cast<int>(i);
    throw std::logic_error("monomial index");
  };
  const int N = static_cast<int>(mons7.size());  // 36
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N, Int(0)));
  std::vector<bool> mixed(N, false);
  // integer-cleared coefficients of the partials
  std::array<num::MultiPoly, 3> gz = g;
  std::array<Int, 3> den{Int(1), Int(1), Int(1)};
  for (int t = 0; t < 3; ++t) {
    for (const auto& [m, c] : g[t].terms())
      mpz_lcm(den[t].get_mpz_t(), den[t].get_mpz_t(), c.get_den().get_mpz_t());
    gz[t] = g[t].scaled(num::Rat(den[t]));
  }
  for (int row = 0; row < N; ++row) {
    const auto& alpha = mons7[row];
    int which = alpha[0] >= 3 ? 0 : (alpha[1] >= 3 ? 1 : 2);
    int ge3 = (alpha[0] >= 3) + (alpha[1] >= 3) + (alpha[2] >= 3);
    mixed[row] = ge3 >= 2;
    std::array<unsigned, 3> beta = alpha;
    beta[which] -= 3;
    for (const auto& [m, c] : gz[which].terms()) {
      std::array<unsigned, 3> col{m[0] + beta[0], m[1] + beta[1], m[2] + beta[2]};
      num::Rat cc = c;
      cc.canonicalize();
      M[row][index_of(col)] += cc.get_num();
    }
  }
  Int dnum = bareiss_det(M);
  std::vector<int> sel;
  for (int i = 0; i < N; ++i)
    if (mixed[i]) sel.push_back(i);
  std::vector<std::vector<Int>> E(sel.size(), std::vector<Int>(sel.size()));
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = 0; j < sel.size(); ++j) E[i][j] = M[sel[i]][sel[j]];
  Int dden = bareiss_det(E);
  return {dnum, dden};
}

// true iff f has a repeated (non-unit) factor
bool is_non_reduced(const Quartic& f) {
  num::MultiPoly p = f.poly();
  for (int v = 0; v < 3; ++v) {
    num::MultiPoly d = p.derivative(v);
    // a repeated factor with positive v-degree forces deg_v >= 2
    if (p.degree_in(v) < 2 || d.degree_in(v) < 1) continue;
    if (num::resultant(p, d, v).is_zero()) return true;
  }
  return false;
}

}  // namespace

bool is_smooth(const Quartic& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("is_smooth: zero form");
  {
    // a quartic independent of one variable is a cone, hence singular
    num::MultiPoly p = f.poly();
    for (int v = 0; v < 3; ++v)
      if (p.degree_in(v) < 1) return false;
  }
  if (is_non_reduced(f)) return false;
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);
  Quartic fc = f;
  for (int attempt = 0; attempt < 24; ++attempt) {
    auto [dnum, dden] = macaulay_dets(fc.gradient());
    if (sgn(dden) != 0) return sgn(dnum) != 0;
    fc = substitute(f, random_map(rng));
  }
  throw std::runtime_error("smoothness certificate: degenerate in all sampled coordinates");
}

}  // namespace btg::geom
