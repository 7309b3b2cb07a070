#ifndef LIE5_NUMERIC_HPP
#define LIE5_NUMERIC_HPP

#include "lie5/rat.hpp"

#include <stdexcept>
#include <string>

namespace lie5 {

/// Closed interval with rational endpoints.  Used wherever a transcendental
/// value needs a certified enclosure; all endpoint arithmetic is exact.
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }
  static QInterval point(const Rat& r) { return QInterval(r, r); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return contains(Rat(0)); }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
  return QInterval(a.lo + b.lo, a.hi + b.hi);
}
inline QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }
inline QInterval operator-(const QInterval& a, const QInterval& b) { return a + (-b); }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
  Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rat lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < lo) lo = c[i];
    if (c[i] > hi) hi = c[i];
  }
  return QInterval(lo, hi);
}

inline QInterval operator*(const Rat& s, const QInterval& a) {
  return QInterval::point(s) * a;
}

inline QInterval operator+(const QInterval& a, const Rat& s) {
  return QInterval(a.lo + s, a.hi + s);
}

/// Division requires the divisor to exclude zero.
inline QInterval operator/(const QInterval& a, const QInterval& b) {
  if (b.contains_zero()) throw std::domain_error("QInterval: division by interval containing 0");
  QInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
  return a * inv;
}

inline QInterval abs(const QInterval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return QInterval(Rat(0), abs(a.lo) > a.hi ? abs(a.lo) : a.hi);
}

/// True if the intervals share at least one point.
inline bool overlap(const QInterval& a, const QInterval& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

namespace detail {

/// Enclosure of 2*atanh(z) for 0 <= z < 1 with width <= eps.
/// Series sum 2*z^(2j+1)/(2j+1); all terms positive, tail bounded by the
/// geometric estimate 2*z^(2N+3)/((2N+3)(1-z^2)).
inline QInterval atanh2_enclosure(const Rat& z, const Rat& eps) {
  if (z.sign() < 0 || z >= Rat(1)) throw std::domain_error("atanh2_enclosure: need 0 <= z < 1");
  if (eps <= Rat(0)) throw std::domain_error("atanh2_enclosure: eps must be positive");
  const Rat z2 = z * z;
  const Rat one_minus = Rat(1) - z2;
  Rat term = z;
  Rat sum = 0;
  long j = 0;
  while (true) {
    sum += term / Rat(2 * j + 1);
    term *= z2;
    Rat tail = Rat(2) * term / (Rat(2 * j + 3) * one_minus);
    if (tail <= eps) {
      Rat lo = Rat(2) * sum;
      return QInterval(lo, lo + tail);
    }
    ++j;
  }
}

inline QInterval ln2_enclosure(const Rat& eps) {
  return atanh2_enclosure(Rat(1, 3), eps);
}

}  // namespace detail

/// Certified enclosure of ln(x) for rational x > 0, width <= eps.
/// Argument reduction by powers of two, then the atanh series on [1,2).
inline QInterval ln_enclosure(const Rat& x, const Rat& eps) {
  if (x.sign() <= 0) throw std::domain_error("ln_enclosure: argument must be positive");
  if (eps <= Rat(0)) throw std::domain_error("ln_enclosure: eps must be positive");

  long k = 0;
  {
    long pn = x.num() == 0 ? 0 : static_cast<long>(mp::msb(x.num()));
    long pd = static_cast<long>(mp::msb(x.den()));
    k = pn - pd;
  }
  Rat m = x / pow(Rat(2), k);
  while (m >= Rat(2)) {
    m /= Rat(2);
    ++k;
  }
  while (m < Rat(1)) {
    m *= Rat(2);
    --k;
  }

  QInterval acc = QInterval::point(Rat(0));
  if (k != 0) {
    long ka = k < 0 ? -k : k;
    QInterval l2 = detail::ln2_enclosure(eps / Rat(2 * ka));
    acc = Rat(k) * l2;
  }
  if (m > Rat(1)) {
    Rat z = (m - Rat(1)) / (m + Rat(1));
    acc = acc + detail::atanh2_enclosure(z, eps / Rat(2));
  }
  return acc;
}

/// Enclosure of { ln t : t in xs } for an interval with xs.lo > 0.
inline QInterval ln_interval(const QInterval& xs, const Rat& eps) {
  if (!xs.positive()) throw std::domain_error("ln_interval: interval must be strictly positive");
  QInterval a = ln_enclosure(xs.lo, eps / Rat(2));
  QInterval b = ln_enclosure(xs.hi, eps / Rat(2));
  return QInterval(a.lo, b.hi);
}

/// Decimal rendering with the given number of fractional digits, half-up.
inline std::string decimal_string(const Rat& r, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = r.num() * scale * 2 + r.den() * (r.sign() < 0 ? -1 : 1);
  BigInt q = num / (r.den() * 2);
  bool neg = q < 0;
  if (neg) q = -q;
  BigInt ip = q / scale, fp = q % scale;
  std::string frac = fp.str();
  while (static_cast<int>(frac.size()) < digits) frac.insert(frac.begin(), '0');
  std::string out = (neg ? "-" : "") + ip.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace lie5

#endif
