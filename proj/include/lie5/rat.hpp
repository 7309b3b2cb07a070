#ifndef LIE5_RAT_HPP
#define LIE5_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lie5 {

namespace mp = boost::multiprecision;

using BigInt = mp::cpp_int;

/// Arbitrary-precision rational scalar.
///
/// Thin strong type over boost's cpp_rational (expression templates off).  The
/// wrapper exists so Eigen only ever sees a class with controlled
/// constructors; the backing multiprecision type must not be exposed to
/// Eigen's conversion probing.  Values are always in reduced form with a
/// positive denominator; that is maintained by the backing type.
class Rat {
public:
  using Backend = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long long>(n)) {}
  Rat(long long n) : v_(n) {}
  Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = Backend(num, den);
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(Backend(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(Backend(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  /// Required by Eigen's isZero/isMuchSmallerThan machinery (found via ADL).
  friend Rat abs(const Rat& a) { return a.v_ < 0 ? Rat(Backend(-a.v_)) : a; }

  /// Serialized form: "p/q", or just "p" for integers.
  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  /// Parses "p", "-p", "p/q".  Whitespace is not accepted.
  static std::optional<Rat> parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  explicit Rat(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  os << numerator(r.v_);
  if (denominator(r.v_) != 1) os << '/' << denominator(r.v_);
  return os;
}

inline std::optional<Rat> Rat::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto parse_int = [](const std::string& t) -> std::optional<BigInt> {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') return std::nullopt;
    try {
      return BigInt(t);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

inline Rat pow(const Rat& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("Rat: 0^negative");
    return Rat(1) / pow(base, -e);
  }
  Rat acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

/// Greatest common divisor on BigInt, nonnegative result.
inline BigInt gcd_int(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt l = (a / gcd_int(a, b)) * b;
  return l < 0 ? BigInt(-l) : l;
}

/// Truncated integer square root; exact flag reports perfect squares.
inline std::pair<BigInt, bool> sqrt_int(const BigInt& n) {
  if (n < 0) return {0, false};
  BigInt r = mp::sqrt(n);
  return {r, r * r == n};
}

inline bool is_square(const Rat& r) {
  if (r.sign() < 0) return false;
  auto [sn, okn] = sqrt_int(r.num());
  auto [sd, okd] = sqrt_int(r.den());
  (void)sn;
  (void)sd;
  return okn && okd;
}

/// Exact square root of a rational perfect square.
inline Rat sqrt_exact(const Rat& r) {
  auto [sn, okn] = sqrt_int(r.num());
  auto [sd, okd] = sqrt_int(r.den());
  if (!okn || !okd) throw std::domain_error("sqrt_exact: not a rational square");
  return Rat(sn, sd);
}

}  // namespace lie5

namespace Eigen {

template <>
struct NumTraits<lie5::Rat> : GenericNumTraits<lie5::Rat> {
  typedef lie5::Rat Real;
  typedef lie5::Rat NonInteger;
  typedef lie5::Rat Nested;
  static inline Real epsilon() { return lie5::Rat(0); }
  static inline Real dummy_precision() { return lie5::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace lie5 {

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

}  // namespace lie5

#endif
