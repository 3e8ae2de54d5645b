#include "num/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace btg::num {

void Dyadic::normalize() {
  if (sgn(man) == 0) {
    exp = 0;
    return;
  }
  auto tz = mpz_scan1(man.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(man.get_mpz_t(), man.get_mpz_t(), tz);
    exp += static_cast<long>(tz);
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exp, b.exp);
  Int am = a.man, bm = b.man;
  mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), a.exp - e);
  mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), b.exp - e);
  return Dyadic(am + bm, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.man * b.man, a.exp + b.exp);
}

int cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  Dyadic d = a - b;
  return d.sign();
}

Rat Dyadic::to_rat() const {
  Rat q(man);
  if (exp >= 0) {
    Int p;
    mpz_mul_2exp(p.get_mpz_t(), Int(1).get_mpz_t(), exp);
    q *= Rat(p);
  } else {
    Int p;
    mpz_mul_2exp(p.get_mpz_t(), Int(1).get_mpz_t(), -exp);
    q /= Rat(p);
  }
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  // good enough for plotting / diagnostics
  long e2;
  double d = mpz_get_d_2exp(&e2, man.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e2 + exp));
}

Dyadic Dyadic::round_down(long prec) const {
  if (is_zero() || exp >= -prec) return *this;
  Int q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), man.get_mpz_t(), -prec - exp);
  return Dyadic(q, -prec);
}

Dyadic Dyadic::round_up(long prec) const {
  if (is_zero() || exp >= -prec) return *this;
  Int q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), man.get_mpz_t(), -prec - exp);
  return Dyadic(q, -prec);
}

Dyadic Dyadic::from_rat_down(const Rat& q, long prec) {
  Int num = q.get_num(), den = q.get_den();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), prec);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -prec);
}

Dyadic Dyadic::from_rat_up(const Rat& q, long prec) {
  Int num = q.get_num(), den = q.get_den();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), prec);
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -prec);
}

std::string Dyadic::to_decimal(int digits, int dir) const {
  if (is_zero()) return "0";
  // value = man * 2^exp; scale to `digits` significant decimal digits
  Int aman = abs(man);
  double log10v =
      (mpz_sizeinbase(aman.get_mpz_t(), 2) + static_cast<double>(exp)) *
      0.30102999566398120;
  long dec_exp = static_cast<long>(std::floor(log10v)) - digits + 1;
  // n = round_dir(man * 2^exp / 10^dec_exp)
  Int num = man, den(1);
  if (exp >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), exp);
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -exp);
  Int p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(dec_exp)));
  if (dec_exp >= 0)
    den *= p10;
  else
    num *= p10;
  Int n;
  if (dir < 0)
    mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_cdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string m = n.get_str();
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m = m.substr(1);
  long e = dec_exp + static_cast<long>(m.size()) - 1;
  std::string out = (neg ? "-" : "");
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

DInterval DInterval::from_rat(const Rat& q, long prec) {
  return DInterval(Dyadic::from_rat_down(q, prec), Dyadic::from_rat_up(q, prec));
}

bool DInterval::contains(const Rat& q) const {
  return lo.to_rat() <= q && q <= hi.to_rat();
}

std::optional<int> DInterval::sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  if (lo.is_zero() && hi.is_zero()) return 0;
  return std::nullopt;
}

Dyadic DInterval::mid() const {
  Dyadic s = lo + hi;
  return Dyadic(s.man, s.exp - 1);
}

DInterval operator+(const DInterval& a, const DInterval& b) {
  return DInterval(a.lo + b.lo, a.hi + b.hi);
}

DInterval operator-(const DInterval& a, const DInterval& b) {
  return DInterval(a.lo - b.hi, a.hi - b.lo);
}

DInterval operator*(const DInterval& a, const DInterval& b) {
  Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Dyadic lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Dyadic hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return DInterval(lo, hi);
}

DInterval DInterval::round_out(long prec) const {
  return DInterval(lo.round_down(prec), hi.round_up(prec));
}

namespace {
// floor / ceil of (a/b) onto grid 2^-prec, as a Dyadic
Dyadic div_dir(const Dyadic& a, const Dyadic& b, long prec, int dir) {
  // a/b = (am * 2^ae) / (bm * 2^be)
  Int num = a.man, den = b.man;
  long e = a.exp - b.exp + prec;
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), e);
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -e);
  Int q;
  if (dir < 0)
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -prec);
}
}  // namespace

DInterval DInterval::div(const DInterval& a, const DInterval& b, long prec) {
  if (b.contains_zero()) throw std::domain_error("interval division by zero");
  Dyadic c[4] = {div_dir(a.lo, b.lo, prec, -1), div_dir(a.lo, b.hi, prec, -1),
                 div_dir(a.hi, b.lo, prec, -1), div_dir(a.hi, b.hi, prec, -1)};
  Dyadic d[4] = {div_dir(a.lo, b.lo, prec, 1), div_dir(a.lo, b.hi, prec, 1),
                 div_dir(a.hi, b.lo, prec, 1), div_dir(a.hi, b.hi, prec, 1)};
  Dyadic lo = *std::min_element(c, c + 4);
  Dyadic hi = *std::max_element(d, d + 4);
  return DInterval(lo, hi);
}

namespace {
Dyadic sqrt_dir(const Dyadic& x, long prec, int dir) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative");
  if (x.is_zero()) return Dyadic();
  // sqrt(m * 2^xe) = isqrt(m * 2^s) * 2^((xe - s)/2) with absolute error
  // <= 2^((xe - s)/2); choose s so that (xe - s)/2 <= -prec and xe - s even.
  long s = x.exp + 2 * prec;
  if (s < 0) s = 0;
  if (((x.exp - s) % 2 + 2) % 2 != 0) s += 1;
  Int m = x.man;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), s);
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  if (dir > 0 && sgn(rem) != 0) r += 1;
  return Dyadic(r, (x.exp - s) / 2);
}
}  // namespace

DInterval DInterval::sqrt(long prec) const {
  Dyadic l = lo.sign() <= 0 ? Dyadic() : sqrt_dir(lo, prec, -1);
  return DInterval(l, sqrt_dir(hi, prec, 1));
}

DInterval DInterval::hull(const DInterval& a, const DInterval& b) {
  return DInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::string DInterval::to_string(int digits) const {
  return "[" + lo.to_decimal(digits, -1) + ", " + hi.to_decimal(digits, 1) + "]";
}

DInterval mul_rat(const Rat& q, const DInterval& x, long prec) {
  return (DInterval::from_rat(q, prec) * x);
}

}  // namespace btg::num
