#pragma once

#include <optional>
#include <string>

#include "num/rational.hpp"

namespace btg::num {

// Exact dyadic rational man * 2^exp. Canonical: man odd, or man == 0 and
// exp == 0.
struct Dyadic {
  Int man{0};
  long exp{0};

  Dyadic() = default;
  Dyadic(Int m, long e) : man(std::move(m)), exp(e) { normalize(); }
  explicit Dyadic(long v) : man(v), exp(0) { normalize(); }

  void normalize();
  bool is_zero() const { return sgn(man) == 0; }
  int sign() const { return sgn(man); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-man, exp); }

  // total order
  friend int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

  Rat to_rat() const;
  double to_double() const;

  // Nearest dyadic on the grid 2^-prec in the given direction.
  Dyadic round_down(long prec) const;
  Dyadic round_up(long prec) const;

  static Dyadic from_rat_down(const Rat& q, long prec);
  static Dyadic from_rat_up(const Rat& q, long prec);

  // Decimal rendering with `digits` significant digits, rounded outward in
  // the given direction (dir < 0 toward -inf, dir > 0 toward +inf).
  std::string to_decimal(int digits, int dir) const;
};

// Closed interval [lo, hi] with dyadic endpoints. Arithmetic is exact unless
// a precision is passed (div/sqrt/round_out), in which case endpoints are
// rounded outward onto the 2^-prec grid.
struct DInterval {
  Dyadic lo, hi;

  DInterval() = default;
  DInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit DInterval(long v) : lo(Dyadic(v)), hi(Dyadic(v)) {}
  static DInterval point(const Dyadic& d) { return DInterval(d, d); }
  static DInterval from_rat(const Rat& q, long prec);
  static DInterval exact_int(const Int& n) {
    Dyadic d(n, 0);
    return point(d);
  }

  bool valid() const { return lo <= hi; }
  bool is_point() const { return lo == hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const Rat& q) const;
  // definite sign, or nullopt if the interval straddles zero (or is the
  // exact zero point, which reports 0)
  std::optional<int> sign() const;
  Dyadic width() const { return hi - lo; }
  Dyadic mid() const;

  friend DInterval operator+(const DInterval& a, const DInterval& b);
  friend DInterval operator-(const DInterval& a, const DInterval& b);
  friend DInterval operator*(const DInterval& a, const DInterval& b);
  DInterval operator-() const { return DInterval(-hi, -lo); }

  DInterval round_out(long prec) const;
  // Pre: !b.contains_zero()
  static DInterval div(const DInterval& a, const DInterval& b, long prec);
  // Pre: lo >= 0. Outward-rounded square root.
  DInterval sqrt(long prec) const;
  static DInterval hull(const DInterval& a, const DInterval& b);

  std::string to_string(int digits = 20) const;
};

DInterval mul_rat(const Rat& q, const DInterval& x, long prec);

}  // namespace btg::num
