#include "geom/quartic.hpp"

#include <stdexcept>

#include "num/polyz.hpp"

namespace btg::geom {

using num::isolate_real_roots;
using num::PolyZ;
using num::squarefree_part;
using num::to_primitive_int;

const std::array<std::array<unsigned, 3>, 15>& quartic_monomials() {
  static const std::array<std::array<unsigned, 3>, 15> table = [] {
    std::array<std::array<unsigned, 3>, 15> t{};
    int n = 0;
    for (int i = 4; i >= 0; --i)
      for (int j = 4 - i; j >= 0; --j) t[n++] = {static_cast<unsigned>(i),
                                                 static_cast<unsigned>(j),
                                                 static_cast<unsigned>(4 - i - j)};
    return t;
  }();
  return table;
}

int quartic_monomial_index(unsigned i, unsigned j, unsigned k) {
  if (i + j + k != 4) throw std::invalid_argument("not a quartic monomial");
  const auto& t = quartic_monomials();
  for (int n = 0; n < 15; ++n)
    if (t[n][0] == i && t[n][1] == j && t[n][2] == k) return n;
  throw std::logic_error("unreachable");
}

Quartic::Quartic(std::array<Rat, 15> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

Quartic Quartic::from_multipoly(const MultiPoly& p) {
  if (p.is_zero()) return Quartic();
  if (p.arity() != 3) throw std::invalid_argument("quartic must have 3 variables");
  std::array<Rat, 15> cs;
  cs.fill(Rat(0));
  for (const auto& [m, c] : p.terms()) {
    if (m[0] + m[1] + m[2] != 4)
      throw std::invalid_argument("polynomial is not a homogeneous quartic");
    cs[quartic_monomial_index(m[0], m[1], m[2])] = c;
  }
  return Quartic(cs);
}

bool Quartic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

MultiPoly Quartic::poly() const {
  MultiPoly p(3);
  const auto& mons = quartic_monomials();
  for (int n = 0; n < 15; ++n)
    p.add_term({mons[n][0], mons[n][1], mons[n][2]}, coeffs_[n]);
  return p;
}

std::array<MultiPoly, 3> Quartic::gradient() const {
  MultiPoly p = poly();
  return {p.derivative(0), p.derivative(1), p.derivative(2)};
}

Rat Quartic::eval(const Rat& x, const Rat& y, const Rat& z) const {
  return poly().eval({x, y, z});
}

Quartic Quartic::normalized() const {
  if (is_zero()) return *this;
  Int den(1);
  for (const auto& c : coeffs_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Int g(0);
  std::array<Rat, 15> cs = coeffs_;
  for (auto& c : cs) {
    c *= Rat(den);
    c.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  int lead_sign = 0;
  for (auto& c : cs) {
    if (lead_sign == 0) lead_sign = sgn(c);
  }
  for (auto& c : cs) {
    c /= Rat(lead_sign < 0 ? -g : g);
    c.canonicalize();
  }
  return Quartic(cs);
}

std::string Quartic::hash() const {
  Quartic n = normalized();
  std::string s;
  for (const auto& c : n.coeffs()) s += num::rat_to_string(c) + ";";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

ProjLine::ProjLine(Rat a, Rat b, Rat c) : l{std::move(a), std::move(b), std::move(c)} {
  int piv = -1;
  for (int i = 0; i < 3; ++i)
    if (sgn(l[i]) != 0) {
      piv = i;
      break;
    }
  if (piv < 0) throw std::invalid_argument("line coordinates are all zero");
  Rat s = l[piv];
  for (auto& x : l) {
    x /= s;
    x.canonicalize();
  }
}

MultiPoly ProjLine::form() const {
  MultiPoly p(3);
  for (int i = 0; i < 3; ++i) {
    MultiPoly::Mono m(3, 0);
    m[i] = 1;
    p.add_term(m, l[i]);
  }
  return p;
}

ProjectiveMap::ProjectiveMap(std::array<std::array<Rat, 3>, 3> rows)
    : m(std::move(rows)) {
  if (sgn(det()) == 0) throw std::invalid_argument("singular projective map");
}

ProjectiveMap ProjectiveMap::identity() {
  std::array<std::array<Rat, 3>, 3> e{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] = Rat(i == j ? 1 : 0);
  return ProjectiveMap(e);
}

Rat ProjectiveMap::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjectiveMap ProjectiveMap::inverse() const {
  Rat d = det();
  std::array<std::array<Rat, 3>, 3> a;
  auto minor = [&](int r, int c) -> Rat {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a[i][j] = minor(j, i) / d;
      a[i][j].canonicalize();
    }
  return ProjectiveMap(a);
}

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& rhs) const {
  std::array<std::array<Rat, 3>, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s(0);
      for (int k = 0; k < 3; ++k) s += m[i][k] * rhs.m[k][j];
      r[i][j] = s;
    }
  return ProjectiveMap(r);
}

std::array<Rat, 3> ProjectiveMap::apply(const std::array<Rat, 3>& p) const {
  std::array<Rat, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return r;
}

Quartic substitute(const Quartic& f, const ProjectiveMap& g) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly li(3);
    for (int j = 0; j < 3; ++j) {
      MultiPoly::Mono m(3, 0);
      m[j] = 1;
      li.add_term(m, g.m[i][j]);
    }
    images.push_back(li);
  }
  return Quartic::from_multipoly(f.poly().subst(images));
}

Quartic apply_map(const Quartic& f, const ProjectiveMap& g) {
  return substitute(f, g.inverse());
}

ProjLine map_line(const ProjLine& l, const ProjectiveMap& g) {
  ProjectiveMap gi = g.inverse();
  std::array<Rat, 3> r;
  for (int j = 0; j < 3; ++j)
    r[j] = l.l[0] * gi.m[0][j] + l.l[1] * gi.m[1][j] + l.l[2] * gi.m[2][j];
  return ProjLine(r[0], r[1], r[2]);
}

ProjLine pull_line(const ProjLine& l, const ProjectiveMap& g) {
  std::array<Rat, 3> r;
  for (int j = 0; j < 3; ++j)
    r[j] = l.l[0] * g.m[0][j] + l.l[1] * g.m[1][j] + l.l[2] * g.m[2][j];
  return ProjLine(r[0], r[1], r[2]);
}

bool BinaryQuartic::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

PolyQ BinaryQuartic::dehom() const {
  PolyQ p;
  p.c.assign(c.begin(), c.end());
  p.trim();
  return p;
}

BinaryQuartic restrict_to_line(const Quartic& f, const ProjLine& L) {
  // chart: eliminate the largest |dual coordinate| (ties: lower index)
  int piv = 0;
  Rat best = num::rat_abs(L.l[0]);
  for (int i = 1; i < 3; ++i) {
    Rat a = num::rat_abs(L.l[i]);
    if (a > best) {
      best = a;
      piv = i;
    }
  }
  int j = -1, k = -1;
  for (int i = 0; i < 3; ++i)
    if (i != piv) (j < 0 ? j : k) = i;
  std::array<std::array<Rat, 3>, 2> basis{};
  basis[0][j] = L.l[piv];
  basis[0][piv] = -L.l[j];
  basis[1][k] = L.l[piv];
  basis[1][piv] = -L.l[k];

  MultiPoly s = MultiPoly::var(2, 0), t = MultiPoly::var(2, 1);
  std::vector<MultiPoly> images(3);
  for (int i = 0; i < 3; ++i)
    images[i] = s.scaled(basis[0][i]) + t.scaled(basis[1][i]);
  MultiPoly q = f.poly().subst(images);
  BinaryQuartic out;
  out.pivot = piv;
  out.basis = basis;
  out.c.fill(Rat(0));
  for (const auto& [m, cf] : q.terms()) out.c[m[0]] = cf;
  return out;
}

int real_points_on_line(const Quartic& f, const ProjLine& L) {
  BinaryQuartic b = restrict_to_line(f, L);
  if (b.is_zero()) throw std::domain_error("line contained in curve");
  PolyQ p = b.dehom();
  int count = 0;
  if (sgn(b.c[4]) == 0) ++count;  // root at [s:t] = [1:0]
  if (p.degree() >= 1) {
    PolyZ sf = squarefree_part(to_primitive_int(p));
    count += static_cast<int>(isolate_real_roots(sf).size());
  } else if (p.is_zero()) {
    // restriction is c4 s^4 only; handled by the [1:0] root above
  }
  return count;
}

ProjectiveMap random_map(std::mt19937_64& rng) {
  for (;;) {
    std::array<std::array<Rat, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        a[i][j] = Rat(static_cast<long>(rng() % 9) - 4);
    Rat d = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (sgn(d) != 0) return ProjectiveMap(a);
  }
}

}  // namespace btg::geom
