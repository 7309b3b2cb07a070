#include "lie5/lattices.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace lie5 {

Poly IntQuartic::poly() const {
  return Poly(std::vector<Rat>{Rat(1), Rat(c), Rat(b), Rat(a), Rat(1)});
}

AdmissibilityResult admissible_quartic(const IntQuartic& q) {
  const Poly p = q.poly();
  AdmissibilityResult out;
  const Poly sf = squarefree_part(p);
  if (sf.degree() != p.degree()) out.reasons.push_back("repeated roots");
  const int real = sturm_count(sf);
  if (real < sf.degree()) out.reasons.push_back("complex roots");
  const int positive = sturm_count(sf, Rat(0), std::nullopt);
  if (positive < sf.degree()) out.reasons.push_back("nonpositive roots");
  out.admissible = out.reasons.empty();
  return out;
}

std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Z4_by_Z:
      return "Z4_by_Z";
    case LatticeKind::Z3_by_Z2:
      return "Z3_by_Z2";
    case LatticeKind::NilLattice:
      return "NilLattice";
  }
  return "?";
}

namespace {

bool is_integral(const QMat& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c).den() != 1) return false;
  return true;
}

}  // namespace

LatticePresentation lattice_from_integer_matrix(const QMat& m, LatticeKind kind,
                                                std::string note) {
  if (m.rows() != m.cols()) throw std::invalid_argument("holonomy matrix must be square");
  if (!is_integral(m)) throw NotIntegralError();
  const Rat d = det(m);
  if (d != Rat(1) && d != Rat(-1)) throw NotUnimodularMatrixError();
  return LatticePresentation{kind, {m}, std::move(note)};
}

NumberFieldData NumberFieldData::make(Poly defining_poly, std::vector<Poly> unit_exprs) {
  if (defining_poly.degree() != 3 || !defining_poly.is_monic())
    throw std::invalid_argument("defining polynomial must be a monic cubic");
  for (const Rat& c : defining_poly.coeffs())
    if (c.den() != 1) throw std::invalid_argument("defining polynomial must have integer coefficients");
  if (!rational_roots(defining_poly).empty())
    throw std::invalid_argument("defining polynomial must be irreducible (it has a rational root)");
  if (sturm_count(defining_poly) != 3)
    throw std::invalid_argument("defining polynomial must have three distinct real roots");
  return NumberFieldData(std::move(defining_poly), std::move(unit_exprs));
}

bool unit_check(const NumberFieldData& nf, const Poly& u) {
  if (u.degree() >= 3) throw std::invalid_argument("unit expression must have degree < 3");
  if (u.is_zero()) return false;
  const Rat r = resultant(nf.defining_poly(), u);
  return r == Rat(1) || r == Rat(-1);
}

namespace {

/// Matrix of multiplication by u on (1, alpha, alpha^2) in Q[x]/(p).
QMat mult_matrix(const Poly& u, const Poly& p) {
  QMat m(3, 3);
  for (Index j = 0; j < 3; ++j) {
    const Poly col = (u * Poly::monomial(static_cast<int>(j), Rat(1))) % p;
    for (Index i = 0; i < 3; ++i) m(i, j) = col.coeff(static_cast<int>(i));
  }
  return m;
}

/// Monic extended gcd: returns (g, s, t) with s a + t b = g.
std::tuple<Poly, Poly, Poly> extended_gcd(Poly a, Poly b) {
  Poly s0 = Poly::one(), s1 = Poly::zero();
  Poly t0 = Poly::zero(), t1 = Poly::one();
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  const Rat lead = a.lead();
  return {a.monic(), (Rat(1) / lead) * s0, (Rat(1) / lead) * t0};
}

Poly mod_inverse(const Poly& u, const Poly& p) {
  auto [g, s, t] = extended_gcd(u % p, p);
  if (g.degree() != 0) throw std::domain_error("element is not invertible modulo p");
  return s % p;
}

Poly mod_power(const Poly& u, long e, const Poly& p) {
  Poly base = (e < 0) ? mod_inverse(u, p) : (u % p);
  unsigned long k = (e < 0) ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Poly acc = Poly::one();
  while (k > 0) {
    if (k & 1) acc = (acc * base) % p;
    base = (base * base) % p;
    k >>= 1;
  }
  return acc;
}

/// Shrinks a sign-change isolating interval for a simple root of sf below the
/// target width.
QInterval refine_root(const Poly& sf, QInterval iv, const Rat& target) {
  Rat flo = sf.eval(iv.lo);
  while (iv.hi - iv.lo > target) {
    const Rat mid = (iv.lo + iv.hi) / Rat(2);
    const Rat fm = sf.eval(mid);
    if (fm.is_zero()) {
      Rat d = (iv.hi - iv.lo) / Rat(8);
      while (Rat(2) * d > target) d /= Rat(2);
      return QInterval(mid - d, mid + d);
    }
    if (fm.sign() == flo.sign()) {
      iv = QInterval(mid, iv.hi);
      flo = fm;
    } else {
      iv = QInterval(iv.lo, mid);
    }
  }
  return iv;
}

/// Enclosure of ln|u(r)| for the root of sf isolated by iv, width <= width.
QInterval log_abs_at_root(const Poly& sf, QInterval iv, const Poly& u, const Rat& width) {
  Rat root_w = iv.hi - iv.lo;
  while (true) {
    iv = refine_root(sf, iv, root_w);
    const QInterval val = u.eval(iv);
    if (!val.contains_zero()) {
      const QInterval mag = abs(val);
      const QInterval ln = ln_interval(QInterval(mag.lo, mag.hi), width / Rat(4));
      if (ln.hi - ln.lo <= width) return ln;
    }
    root_w /= Rat(16);
  }
}

}  // namespace

QMat unit_action_matrix(const NumberFieldData& nf, const Poly& u, long power) {
  if (power < 0) throw std::invalid_argument("power must be nonnegative");
  if (!unit_check(nf, u)) throw NotAUnitError();
  return mult_matrix(mod_power(u, power, nf.defining_poly()), nf.defining_poly());
}

std::array<QInterval, 3> log_embedding(const NumberFieldData& nf, const Poly& u,
                                       const Rat& width) {
  if (width <= Rat(0)) throw std::invalid_argument("width must be positive");
  if (!unit_check(nf, u)) throw NotAUnitError();
  const Poly& p = nf.defining_poly();
  const std::vector<QInterval> roots = real_root_intervals(p, Rat(1, 16));
  std::array<QInterval, 3> out;
  for (int i = 0; i < 3; ++i)
    out[static_cast<std::size_t>(i)] =
        log_abs_at_root(p, roots[static_cast<std::size_t>(i)], u, width);
  return out;
}

LatticePresentation dirichlet_lattice(const NumberFieldData& nf, const Poly& u1,
                                      const Poly& u2) {
  if (!unit_check(nf, u1) || !unit_check(nf, u2)) throw NotAUnitError();
  const Poly& p = nf.defining_poly();

  // An exact relation u1^a = +-u2^b (small exponents) is cheap to detect and
  // refutes independence outright, so look for one before spending effort on
  // interval refinement that can never terminate for dependent units.
  for (long a = 0; a <= 8; ++a) {
    for (long b = -8; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      const Poly lhs = mod_power(u1, a, p);
      const Poly rhs = mod_power(u2, b, p);
      if (lhs == rhs || lhs == -rhs) throw DependentUnitsError();
    }
  }

  // Certify independence: some 2x2 minor of the 2x3 log matrix excludes 0.
  const Rat floor = pow(Rat(1, 2), 64);
  bool independent = false;
  for (Rat w = Rat(1, 16); w >= floor; w /= Rat(16)) {
    const auto l1 = log_embedding(nf, u1, w);
    const auto l2 = log_embedding(nf, u2, w);
    for (int i = 0; i < 3 && !independent; ++i) {
      for (int j = i + 1; j < 3 && !independent; ++j) {
        const QInterval minor = l1[static_cast<std::size_t>(i)] * l2[static_cast<std::size_t>(j)] -
                                l1[static_cast<std::size_t>(j)] * l2[static_cast<std::size_t>(i)];
        if (!minor.contains_zero()) independent = true;
      }
    }
    if (independent) break;
  }
  if (!independent)
    throw CertificationFailure(
        "could not certify independence at width 2^-64 nor exhibit a relation with exponents up "
        "to 8");

  const QMat a1 = unit_action_matrix(nf, u1, 2);
  const QMat a2 = unit_action_matrix(nf, u2, 2);
  if (QMat(a1 * a2) != QMat(a2 * a1))
    throw CertificationFailure("holonomy matrices fail to commute");
  if (det(a1) != Rat(1) || det(a2) != Rat(1))
    throw CertificationFailure("holonomy matrices must have determinant 1");
  return LatticePresentation{LatticeKind::Z3_by_Z2,
                             {a1, a2},
                             "squared unit multiplication matrices on (1, alpha, alpha^2)"};
}

Sol41BlockReport sol41_block_check(const Rat& width) {
  Sol41BlockReport out;
  for (int d = 0; d <= 1; ++d) {
    QMat m = QMat::Identity(4, 4);
    m(1, 0) = Rat(d);
    m(2, 3) = Rat(1);
    m(3, 2) = Rat(1);
    m(3, 3) = Rat(2);
    out.matrices.push_back(m);
  }
  out.integral = true;
  out.unimodular = true;
  for (const QMat& m : out.matrices) {
    if (!is_integral(m)) out.integral = false;
    const Rat dd = det(m);
    if (dd != Rat(1) && dd != Rat(-1)) out.unimodular = false;
  }

  QMat block(2, 2);
  block << Rat(1), Rat(1), Rat(1), Rat(2);
  const Poly cp = char_poly(block);
  out.block_charpoly_ok = (cp == Poly(std::vector<Rat>{Rat(1), Rat(-3), Rat(1)}));
  out.block_det_ok = (det(block) == Rat(1));

  // Eigenvalue logs from the block's own characteristic polynomial.
  const auto eigs = real_root_intervals(cp, Rat(1, 16));
  const QInterval log_small = log_abs_at_root(cp, eigs[0], Poly::x(), width);
  const QInterval log_large = log_abs_at_root(cp, eigs[1], Poly::x(), width);

  // sqrt5 and s = ln((3+sqrt5)/2)/sqrt5 built independently from x^2 - 5.
  const Poly x2m5(std::vector<Rat>{Rat(-5), Rat(0), Rat(1)});
  QInterval sqrt5 = real_root_intervals(x2m5, Rat(1, 16))[1];
  sqrt5 = refine_root(x2m5, sqrt5, width / Rat(16));
  const QInterval lam = (sqrt5 + Rat(3)) * QInterval::point(Rat(1, 2));
  const QInterval ln_lam = ln_interval(lam, width / Rat(4));
  out.s = ln_lam / sqrt5;
  const QInterval s_sqrt5 = out.s * sqrt5;
  out.logs_match = overlap(log_large, s_sqrt5) && overlap(log_small, -s_sqrt5) &&
                   log_large.hi - log_large.lo <= width && s_sqrt5.hi - s_sqrt5.lo <= width;

  const QInterval ln_sqrt5 = ln_interval(sqrt5, width / Rat(4));
  out.s_printed = ln_lam / ln_sqrt5;
  out.discrepancy = out.s_printed - out.s;
  out.discrepancy_nonzero = !out.discrepancy.contains_zero();
  return out;
}

}  // namespace lie5
