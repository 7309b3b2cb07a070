#include "lie5/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lie5 {

namespace {

// All positive divisors of |n|, or nullopt when trial division would need
// more than ~2e6 iterations.  Callers treat nullopt as "cannot factor".
std::optional<std::vector<BigInt>> all_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::vector<BigInt> small, large;
  BigInt d = 1;
  long iter = 0;
  while (d * d <= n) {
    if (++iter > 2000000) return std::nullopt;
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
    ++d;
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Smallest positive integer L with L^k * coeff_k integral for a monic p when
// substituting x -> y/L; here simply the lcm of coefficient denominators.
BigInt denominator_lcm(const Poly& p) {
  BigInt l = 1;
  for (const Rat& c : p.coeffs()) l = lcm_int(l, c.den());
  return l;
}

// y^n p(y/L) for monic p: monic with integer coefficients, roots scaled by L.
Poly integer_scaled(const Poly& p, const BigInt& l) {
  return scale_eigenvalues(p, Rat(l));
}

// Exact division test; returns quotient if b | a.
std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

// Splits a monic integer quartic with no rational roots into two monic integer
// quadratics if possible (Gauss: any monic rational factorization is integer).
std::optional<std::pair<Poly, Poly>> quartic_quadratic_split(const Poly& q) {
  const BigInt a3 = q.coeff(3).num(), a2 = q.coeff(2).num(), a1 = q.coeff(1).num(),
               a0 = q.coeff(0).num();
  auto divs = all_divisors(a0);
  if (!divs) return std::nullopt;
  std::vector<BigInt> candidates;
  for (const BigInt& d : *divs) {
    candidates.push_back(d);
    candidates.push_back(-d);
  }
  for (const BigInt& v : candidates) {
    if (a0 % v != 0) continue;
    BigInt z = a0 / v;
    // (y^2+u*y+v)(y^2+w*y+z): u+w=a3, uw+v+z=a2, uz+wv=a1, vz=a0.
    if (v != z) {
      BigInt num = a1 - a3 * v, den = z - v;
      if (num % den != 0) continue;
      BigInt u = num / den, w = a3 - u;
      if (u * w + v + z != a2) continue;
      Poly f1(std::vector<Rat>{Rat(v), Rat(u), Rat(1)});
      Poly f2(std::vector<Rat>{Rat(z), Rat(w), Rat(1)});
      return std::make_pair(f1, f2);
    }
    // v == z: u+w=a3, uw=a2-2v, and a1 must equal v*a3.
    if (a1 != v * a3) continue;
    BigInt disc = a3 * a3 - 4 * (a2 - 2 * v);
    auto [s, exact] = sqrt_int(disc);
    if (!exact) continue;
    if ((a3 + s) % 2 != 0) continue;
    BigInt u = (a3 + s) / 2, w = a3 - u;
    Poly f1(std::vector<Rat>{Rat(v), Rat(u), Rat(1)});
    Poly f2(std::vector<Rat>{Rat(v), Rat(w), Rat(1)});
    return std::make_pair(f1, f2);
  }
  return std::nullopt;
}

// Searches for a monic integer quadratic divisor of a monic integer poly of
// degree >= 5 by enumerating constant terms among divisors of q(0) and linear
// coefficients within the symmetric-function bound from the root bound.
std::optional<Poly> quadratic_divisor(const Poly& q) {
  auto divs = all_divisors(q.coeff(0).num());
  if (!divs) return std::nullopt;
  Rat bound2 = Rat(2) * cauchy_root_bound(q);
  BigInt ubound = bound2.num() / bound2.den() + 1;
  if (ubound > 4000) return std::nullopt;
  for (const BigInt& d : *divs) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      BigInt v = sgn == 0 ? d : BigInt(-d);
      for (BigInt u = -ubound; u <= ubound; ++u) {
        Poly cand(std::vector<Rat>{Rat(v), Rat(u), Rat(1)});
        if (try_divide(q, cand)) return cand;
      }
    }
  }
  return std::nullopt;
}

// Factors a monic squarefree polynomial with no rational roots.
void factor_rootless(const Poly& p, std::vector<Poly>& out) {
  const int d = p.degree();
  if (d <= 0) return;
  if (d <= 3) {
    // deg 2 with square discriminant would have rational roots; deg 3 without
    // rational roots is irreducible.
    out.push_back(p);
    return;
  }
  const BigInt l = denominator_lcm(p);
  const Poly q = integer_scaled(p, l);
  const Rat inv(BigInt(1), l);
  if (d == 4) {
    if (auto split = quartic_quadratic_split(q)) {
      out.push_back(scale_eigenvalues(split->first, inv));
      out.push_back(scale_eigenvalues(split->second, inv));
      return;
    }
    out.push_back(p);
    return;
  }
  // Degree >= 5: peel quadratic divisors.  A rootless degree-5 polynomial can
  // only split as 2+3, so this is complete through degree 5; larger residuals
  // may miss cubic-times-cubic splits, which no toolkit operation produces.
  if (auto quad = quadratic_divisor(q)) {
    Poly f = scale_eigenvalues(*quad, inv);
    out.push_back(f);
    factor_rootless((p / f).monic(), out);
    return;
  }
  out.push_back(p);
}

std::vector<Poly> factor_squarefree_monic(const Poly& p) {
  std::vector<Poly> out;
  Poly rest = p;
  for (const Rat& r : rational_roots(p)) {
    Poly lin(std::vector<Rat>{-r, Rat(1)});
    out.push_back(lin);
    rest = (rest / lin).monic();
  }
  factor_rootless(rest, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<Rat> roots;
  Poly q = p.monic();
  // Strip roots at zero first.
  while (!q.is_zero() && q.coeff(0).is_zero() && q.degree() >= 1) {
    roots.push_back(Rat(0));
    q = (q / Poly::x()).monic();
  }
  if (q.degree() >= 1) {
    const BigInt l = denominator_lcm(q);
    const Poly zi = integer_scaled(q, l);
    if (auto divs = all_divisors(zi.coeff(0).num())) {
      for (const BigInt& d : *divs) {
        for (int sgn = 0; sgn < 2; ++sgn) {
          Rat cand(sgn == 0 ? d : BigInt(-d), l);
          if (q.eval(cand).is_zero()) {
            // Multiplicity via repeated division.
            Poly lin(std::vector<Rat>{-cand, Rat(1)});
            Poly t = q;
            while (auto qq = try_divide(t, lin)) {
              roots.push_back(cand);
              t = *qq;
            }
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  Poly f = p.monic();
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  Poly u = gcd(f, f.derivative());
  Poly v = (f / u).monic();
  Poly w = (f.derivative() / u);
  int i = 1;
  while (v.degree() > 0) {
    Poly d = w - v.derivative();
    Poly ai = gcd(v, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    v = (v / ai).monic();
    w = d / ai;
    ++i;
  }
  return out;
}

std::vector<std::pair<Poly, int>> factor_rational(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    for (const Poly& irr : factor_squarefree_monic(sf)) out.emplace_back(irr, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

std::optional<Poly> parse_poly(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  if (s.find(',') != std::string::npos) {
    std::vector<Rat> coeffs;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto r = Rat::parse(tok);
      if (!r) return std::nullopt;
      coeffs.push_back(*r);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Poly(std::move(coeffs));
  }

  // Monomial sum.  Split into sign-prefixed terms.
  std::map<int, Rat> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) return std::nullopt;

    Rat coeff(1);
    int exp = 0;
    auto xpos = term.find('x');
    std::string chead = term.substr(0, xpos == std::string::npos ? term.size() : xpos);
    if (!chead.empty() && chead.back() == '*') chead.pop_back();
    if (!chead.empty()) {
      auto r = Rat::parse(chead);
      if (!r) return std::nullopt;
      coeff = *r;
    } else if (xpos == std::string::npos) {
      return std::nullopt;
    }
    if (xpos != std::string::npos) {
      exp = 1;
      std::string tail = term.substr(xpos + 1);
      if (!tail.empty()) {
        if (tail[0] != '^') return std::nullopt;
        try {
          std::size_t used = 0;
          exp = std::stoi(tail.substr(1), &used);
          if (used != tail.size() - 1 || exp < 0) return std::nullopt;
        } catch (const std::exception&) {
          return std::nullopt;
        }
      }
    }
    auto [it, inserted] = terms.emplace(exp, sign == 1 ? coeff : -coeff);
    if (!inserted) it->second += sign == 1 ? coeff : -coeff;
  }
  int maxdeg = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<Rat> coeffs(maxdeg + 1, Rat(0));
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Poly(std::move(coeffs));
}

}  // namespace lie5
