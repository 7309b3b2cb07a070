#ifndef LIE5_POLY_HPP
#define LIE5_POLY_HPP

#include "lie5/numeric.hpp"
#include "lie5/rat.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lie5 {

struct ZeroPolynomialError : std::domain_error {
  ZeroPolynomialError() : std::domain_error("operation undefined for the zero polynomial") {}
};

struct NotSquarefreeError : std::domain_error {
  NotSquarefreeError() : std::domain_error("polynomial has repeated roots") {}
};

/// Univariate polynomial over Q.  Coefficients are stored ascending and the
/// representation is normalized (no trailing zero coefficients); the zero
/// polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rat(1)); }
  static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
  static Poly x() { return monomial(1, Rat(1)); }
  static Poly monomial(int deg, const Rat& c) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
  }
  const Rat& lead() const {
    if (c_.empty()) throw ZeroPolynomialError();
    return c_.back();
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<Rat> v(c_);
    for (auto& e : v) e = -e;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> v(p.c_);
    for (auto& e : v) e *= s;
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroPolynomialError();
    Poly r = a;
    std::vector<Rat> q(std::max<int>(a.degree() - b.degree() + 1, 0), Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      Rat f = r.lead() / b.lead();
      q[shift] = f;
      std::vector<Rat> rc = r.c_;
      for (int i = 0; i <= b.degree(); ++i) rc[i + shift] -= f * b.c_[i];
      r = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (is_zero()) throw ZeroPolynomialError();
    return (Rat(1) / lead()) * (*this);
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  QInterval eval(const QInterval& x) const {
    QInterval acc = QInterval::point(Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Coefficient-wise integer scaling data: L^deg * p(x / L) for the smallest
  /// L clearing denominators of a monic p; result is monic with integer
  /// coefficients and eigenvalues scaled by L.
  friend Poly scale_eigenvalues(const Poly& p, const Rat& s) {
    if (p.is_zero()) return p;
    int n = p.degree();
    std::vector<Rat> v(p.c_);
    for (int k = 0; k <= n; ++k) v[k] *= pow(s, n - k);
    return Poly(std::move(v));
  }

  /// x^deg * p(1/x): the coefficient sequence reversed.
  Poly reversal() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  std::string str() const;

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline Poly pow(const Poly& p, int e) {
  if (e < 0) throw std::domain_error("Poly: negative power");
  Poly acc = Poly::one(), b = p;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

/// Monic gcd; gcd(0,0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return ((a * b) / gcd(a, b)).monic();
}

/// p with all repeated roots collapsed to multiplicity one, monic.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() == 0) return Poly::one();
  return (p / gcd(p, p.derivative())).monic();
}

inline bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

/// Strict bound on the absolute value of every complex root.
inline Rat cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  Rat m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rat a = abs(p.coeff(k) / p.lead());
    if (a > m) m = a;
  }
  return Rat(1) + m;
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2) {
    Poly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

inline int variations_at(const std::vector<Poly>& chain, const std::optional<Rat>& x, bool at_pos_inf) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    if (q.is_zero()) {
      signs.push_back(0);
    } else if (x) {
      signs.push_back(q.eval(*x).sign());
    } else if (at_pos_inf) {
      signs.push_back(q.lead().sign());
    } else {
      signs.push_back(q.degree() % 2 == 0 ? q.lead().sign() : -q.lead().sign());
    }
  }
  return sign_variations(signs);
}

}  // namespace detail

/// Number of real roots of a squarefree p in the open interval (lo, hi);
/// nullopt endpoints mean -infinity / +infinity.
inline int sturm_count(const Poly& p, const std::optional<Rat>& lo = std::nullopt,
                       const std::optional<Rat>& hi = std::nullopt) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (!is_squarefree(p)) throw NotSquarefreeError();
  if (p.degree() == 0) return 0;
  if (lo && hi && *lo >= *hi) return 0;
  auto chain = detail::sturm_chain(p);
  int va = detail::variations_at(chain, lo, false);
  int vb = detail::variations_at(chain, hi, true);
  int corr = (hi && p.eval(*hi).is_zero()) ? 1 : 0;
  return va - vb - corr;
}

/// Disjoint open rational intervals, one per real root of p, each of width at
/// most `width`, sorted ascending.  Repeated roots are collapsed first.
inline std::vector<QInterval> real_root_intervals(const Poly& p, const Rat& width) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (width <= Rat(0)) throw std::domain_error("real_root_intervals: width must be positive");
  Poly sf = squarefree_part(p);
  if (sf.degree() <= 0) return {};
  const Rat bound = cauchy_root_bound(sf);

  std::vector<QInterval> out;
  // Each work item is an open interval with non-root endpoints.
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = sturm_count(sf, lo, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo <= width) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (sf.eval(mid).is_zero()) {
      // Exact rational root: carve out a private interval around it.
      Rat delta = width / Rat(2);
      while (sf.eval(mid - delta).is_zero() || sf.eval(mid + delta).is_zero() ||
             sturm_count(sf, mid - delta, mid + delta) != 1) {
        delta /= Rat(2);
      }
      out.emplace_back(mid - delta, mid + delta);
      work.emplace_back(lo, mid - delta);
      work.emplace_back(mid + delta, hi);
    } else {
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(out.begin(), out.end(), [](const QInterval& a, const QInterval& b) { return a.lo < b.lo; });
  return out;
}

namespace detail {

/// Determinant by fraction-free-enough Gaussian elimination over Q.
inline Rat dense_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace detail

/// Resultant with the normalization lc(q)^deg(p) * prod p(beta) over the roots
/// beta of q; resultant(x-a, x-b) = b - a under this convention.
inline Rat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError();
  const int dp = p.degree(), dq = q.degree();
  if (dp == 0) return pow(p.coeff(0), dq);
  if (dq == 0) return pow(q.coeff(0), dp);
  // Classic Sylvester determinant of (q, p) gives lc(q)^dp * prod p over roots of q.
  const int n = dp + dq;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m[r][r + k] = q.coeff(dq - k);
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[dp + r][r + k] = p.coeff(dp - k);
  return detail::dense_det(std::move(m));
}

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (k == 0 || a != Rat(1)) os << a;
    if (k >= 1) {
      os << 'x';
      if (k >= 2) os << '^' << k;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/// Parses either a comma-separated ascending coefficient list ("1,-3,0,1") or
/// a monomial sum ("x^3-3x+1", "1 - 3*x + x^3", "1/2x^2").
std::optional<Poly> parse_poly(const std::string& s);

/// Yun squarefree decomposition: list of (squarefree monic factor, multiplicity),
/// multiplicities ascending, product of factor^mult = monic(p).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Monic irreducible factors of a nonzero p with multiplicities, sorted
/// canonically.  Complete through residual factors of degree 5; see notes in
/// the implementation for the (unreachable in-toolkit) degree >= 6 residuals.
std::vector<std::pair<Poly, int>> factor_rational(const Poly& p);

/// Rational roots of a nonzero p, sorted ascending.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace lie5

#endif
