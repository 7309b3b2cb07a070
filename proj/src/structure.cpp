#include "lie5/structure.hpp"

#include <algorithm>

namespace lie5 {

namespace {

bool is_nilpotent_matrix(const QMat& m) {
  const Index n = m.rows();
  QMat p = QMat::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    p = (p * m).eval();
    if (p.isZero(Rat(0))) return true;
  }
  return n == 0;
}

}  // namespace

LieAlgebra induced_algebra(const LieAlgebra& g, const Subspace& s,
                           const std::string& name_prefix) {
  if (s.ambient_dim() != g.dim())
    throw std::invalid_argument("induced_algebra: ambient dimension mismatch");
  const Index k = s.dim();
  QMat basis_t = s.basis().transpose();
  BracketMap brackets;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < i; ++j) {
      QVec w = g.bracket(QVec(s.basis().row(i).transpose()), QVec(s.basis().row(j).transpose()));
      auto coords = solve(basis_t, w);
      if (!coords) throw std::invalid_argument("induced_algebra: subspace is not a subalgebra");
      if (!coords->isZero(Rat(0))) brackets[{i, j}] = *coords;
    }
  }
  std::vector<std::string> names;
  for (Index i = 1; i <= k; ++i) names.push_back(name_prefix + std::to_string(i));
  return LieAlgebra::make(k, std::move(names), std::move(brackets));
}

Subspace nilradical(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvableError();
  const Index n = g.dim();
  if (n == 0) return Subspace::zero(0);

  // Associative hull of the adjoint image: close the span of the ad matrices
  // under matrix multiplication.
  std::vector<QMat> hull;
  RrefBasis span(n * n);
  for (Index i = 0; i < n; ++i) {
    QMat m = g.ad(i);
    if (span.insert(vec_row_major(m))) hull.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < hull.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      for (const QMat& p : {QMat(hull[a] * hull[b]), QMat(hull[b] * hull[a])}) {
        if (span.insert(vec_row_major(p))) hull.push_back(p);
      }
    }
  }

  // Trace-form radical: x is in the nilradical iff tr(ad x . B) = 0 for every
  // B in the hull.
  QMat cond(static_cast<Index>(hull.size()), n);
  for (std::size_t r = 0; r < hull.size(); ++r) {
    for (Index i = 0; i < n; ++i)
      cond(static_cast<Index>(r), i) = (g.ad(i) * hull[r]).trace();
  }
  Subspace nil = Subspace::span_cols(kernel(cond));

  // Independent certificate: a nilpotent ideal containing [g, g] whose
  // elements are all ad-nilpotent.
  if (!is_ideal(g, nil)) throw CertificationError("nilradical candidate is not an ideal");
  if (!nil.contains(bracket_span(g, Subspace::full(n), Subspace::full(n))))
    throw CertificationError("nilradical candidate does not contain the derived algebra");
  if (!is_nilpotent(induced_algebra(g, nil)))
    throw CertificationError("nilradical candidate is not nilpotent");
  for (Index i = 0; i < nil.dim(); ++i) {
    if (!is_nilpotent_matrix(g.ad(QVec(nil.basis().row(i).transpose()))))
      throw CertificationError("nilradical candidate has a non-ad-nilpotent element");
  }
  return nil;
}

std::string to_string(const NilpotentClass& c) {
  switch (c.kind) {
    case NilpotentKind::Abelian: return "abelian(" + std::to_string(c.dim) + ")";
    case NilpotentKind::Heisenberg3: return "heisenberg3";
    case NilpotentKind::RplusN3: return "R+n3";
    case NilpotentKind::N4: return "n4";
    case NilpotentKind::Other: return "other(" + std::to_string(c.dim) + ")";
  }
  return "?";
}

NilpotentClass classify_nilpotent_dim_le4(const LieAlgebra& g) {
  if (!is_nilpotent(g)) throw NotNilpotentError("algebra is not nilpotent");
  if (g.dim() > 4) throw DimTooLargeError(g.dim());
  const Subspace full = Subspace::full(g.dim());
  const Index derived = bracket_span(g, full, full).dim();
  if (derived == 0) return {NilpotentKind::Abelian, g.dim()};
  if (derived == 1 && g.dim() == 3) return {NilpotentKind::Heisenberg3, 3};
  if (derived == 1 && g.dim() == 4) return {NilpotentKind::RplusN3, 4};
  if (derived == 2 && g.dim() == 4) return {NilpotentKind::N4, 4};
  return {NilpotentKind::Other, g.dim()};
}

JordanProfile jordan_profile(const QMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("jordan_profile: matrix must be square");
  const Index n = a.rows();
  JordanProfile p;
  p.characteristic = char_poly(a);
  p.minimal = min_poly(a);
  p.semisimple = is_squarefree(p.minimal);
  if (n == 0) {
    p.all_real = true;
    return p;
  }
  const Poly sfc = squarefree_part(p.characteristic);
  p.block_count = n - rank(eval_poly(sfc, a));
  p.distinct_real_count = sturm_count(sfc);
  p.all_real = p.distinct_real_count == sfc.degree();
  for (const auto& [f, mult] : factor_rational(p.characteristic)) {
    const Index d = f.degree();
    std::vector<Index> nullity;  // nullity of f(a)^k, k = 1..mult
    Poly fk = Poly::one();
    for (int k = 1; k <= mult; ++k) {
      fk = fk * f;
      nullity.push_back(n - rank(eval_poly(fk, a)));
    }
    std::vector<Index> ge;  // number of blocks of size >= k
    for (int k = 1; k <= mult; ++k) {
      const Index prev = k >= 2 ? nullity[static_cast<std::size_t>(k - 2)] : 0;
      ge.push_back((nullity[static_cast<std::size_t>(k - 1)] - prev) / d);
    }
    std::vector<Index> sizes;
    for (int k = mult; k >= 1; --k) {
      const Index next = k < mult ? ge[static_cast<std::size_t>(k)] : 0;
      for (Index c = 0; c < ge[static_cast<std::size_t>(k - 1)] - next; ++c)
        sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    p.blocks.emplace_back(f, std::move(sizes));
  }
  return p;
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Undecided: return "undecided";
  }
  return "?";
}

TriState has_4dim_abelian_ideal(const LieAlgebra& g) {
  if (g.dim() != 5) throw std::invalid_argument("has_4dim_abelian_ideal: dimension must be 5");
  if (!is_nilpotent(g)) throw std::invalid_argument("has_4dim_abelian_ideal: algebra must be nilpotent");
  const Subspace full = Subspace::full(5);
  const Subspace derived = bracket_span(g, full, full);
  // Any 4-dimensional abelian ideal contains the derived algebra (the
  // quotient by it is 1-dimensional) and centralizes it.
  if (!is_abelian_subspace(g, derived)) return TriState::No;
  const Subspace c = centralizer(g, derived);
  if (c.dim() <= 3) return TriState::No;
  if (c.dim() == 4) return is_abelian_subspace(g, c) ? TriState::Yes : TriState::No;
  // c.dim() == 5: the derived algebra is central, so the bracket factors
  // through an antisymmetric form with values in it.
  const Index dd = derived.dim();
  if (dd == 0) return TriState::Yes;
  if (dd == 1) {
    // A totally isotropic 4-dimensional subspace containing the radical
    // exists iff the form has rank at most 2.
    QMat basis_t = derived.basis().transpose();
    QMat w(5, 5);
    for (Index i = 0; i < 5; ++i) {
      for (Index j = 0; j < 5; ++j) {
        auto coords = solve(basis_t, g.bracket(i, j));
        w(i, j) = coords ? (*coords)(0) : Rat(0);
      }
    }
    return rank(w) <= 2 ? TriState::Yes : TriState::No;
  }
  if (dd == 2) {
    // Two antisymmetric forms on the 3-dimensional quotient; their radical
    // lines always span a common isotropic plane, whose preimage works.
    return TriState::Yes;
  }
  return TriState::Undecided;
}

}  // namespace lie5
