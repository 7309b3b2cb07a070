#include "lie5/derivations.hpp"

#include <random>

namespace lie5 {

namespace {

/// Hyperplane of traceless matrices in the vectorized matrix space.
Subspace traceless_subspace(Index n) {
  QMat row = QMat::Zero(1, n * n);
  for (Index a = 0; a < n; ++a) row(0, a * n + a) = Rat(1);
  return Subspace::span_cols(kernel(row));
}

/// Linear functional D -> tr(D|_s) in vectorized coordinates, valid when s is
/// D-invariant: with s in reduced echelon form, the coordinate of D b_i along
/// b_i is the pivot entry of D b_i.
QMat trace_on_functional(Index n, const Subspace& s) {
  QMat row = QMat::Zero(1, n * n);
  for (Index i = 0; i < s.dim(); ++i) {
    Index p = 0;
    while (s.basis()(i, p) == Rat(0)) ++p;
    for (Index b = 0; b < n; ++b) row(0, p * n + b) += s.basis()(i, b);
  }
  return row;
}

}  // namespace

DerivationSpace derivation_algebra(const LieAlgebra& g) {
  const Index n = g.dim();
  DerivationSpace out;
  out.dim_g = n;
  if (n == 0) {
    out.all = Subspace::zero(0);
    out.inner = Subspace::zero(0);
    return out;
  }

  // Leibniz system over the unknowns D_{ab} (variable index a*n + b).
  const Index pairs = n * (n - 1) / 2;
  QMat sys = QMat::Zero(pairs * n, n * n);
  Index row = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      const QVec c = g.bracket(i, j);
      for (Index k = 0; k < n; ++k) {
        for (Index b = 0; b < n; ++b) sys(row, k * n + b) += c(b);
        for (Index a = 0; a < n; ++a) {
          sys(row, a * n + i) -= g.bracket(a, j)(k);
          sys(row, a * n + j) -= g.bracket(i, a)(k);
        }
        ++row;
      }
    }
  }
  out.all = Subspace::span_cols(kernel(sys));

  QMat inner_gens(n, n * n);
  for (Index i = 0; i < n; ++i) inner_gens.row(i) = vec_row_major(g.ad(i)).transpose();
  out.inner = Subspace::span_rows(inner_gens);

  // Traceless derivations, reduced modulo the traceless inner derivations.
  const Subspace traceless = out.all.intersect(traceless_subspace(n));
  const Subspace inner_t = out.inner.intersect(traceless);
  QMat reduced(traceless.dim(), n * n);
  for (Index i = 0; i < traceless.dim(); ++i)
    reduced.row(i) = inner_t.reduce(QVec(traceless.basis().row(i).transpose())).transpose();
  const Subspace reps = Subspace::span_rows(reduced);
  for (Index i = 0; i < reps.dim(); ++i)
    out.sout_representatives.push_back(unvec_row_major(QVec(reps.basis().row(i).transpose()), n, n));
  return out;
}

bool sout_matches_parametrization(const LieAlgebra& g, const SoutPattern& pattern) {
  const Index n = g.dim();
  const DerivationSpace ds = derivation_algebra(g);

  // Constrained traceless derivation space.
  Subspace constrained = ds.all.intersect(traceless_subspace(n));
  for (const Subspace& s : pattern.traceless_on) {
    if (s.ambient_dim() != n) throw std::invalid_argument("pattern subspace has wrong ambient");
    constrained = constrained.intersect(Subspace::span_cols(kernel(trace_on_functional(n, s))));
  }

  // Parameters must be derivations satisfying every constraint themselves.
  QMat pgens(static_cast<Index>(pattern.parameters.size()), n * n);
  for (std::size_t i = 0; i < pattern.parameters.size(); ++i) {
    const QMat& p = pattern.parameters[i];
    if (p.rows() != n || p.cols() != n)
      throw std::invalid_argument("pattern parameter has wrong shape");
    const QVec v = vec_row_major(p);
    if (!constrained.contains(v)) return false;
    pgens.row(static_cast<Index>(i)) = v.transpose();
  }
  const Subspace pspan = Subspace::span_rows(pgens);

  // Every constrained class must have a representative in the pattern.
  if (!(pspan + ds.inner).contains(constrained)) return false;

  // Parameter count must equal the constrained traceless-outer dimension.
  const Index sout_dim = constrained.dim() - constrained.intersect(ds.inner).dim();
  return static_cast<Index>(pattern.parameters.size()) == sout_dim;
}

ClosureCheck bracket_closure_check(const std::vector<QMat>& mats) {
  ClosureCheck out;
  if (mats.empty()) {
    out.closed = true;
    out.perfect = true;  // both spans are zero
    return out;
  }
  const Index n = mats.front().rows();
  for (const QMat& m : mats) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("bracket_closure_check: matrices must be square, same size");
  }
  QMat gens(static_cast<Index>(mats.size()), n * n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    gens.row(static_cast<Index>(i)) = vec_row_major(mats[i]).transpose();
  const Subspace span = Subspace::span_rows(gens);

  std::vector<QVec> comms;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      comms.push_back(vec_row_major(QMat(mats[i] * mats[j] - mats[j] * mats[i])));
    }
  }
  QMat cgens(static_cast<Index>(comms.size()), n * n);
  for (std::size_t i = 0; i < comms.size(); ++i)
    cgens.row(static_cast<Index>(i)) = comms[i].transpose();
  const Subspace cspan = Subspace::span_rows(cgens);

  out.closed = span.contains(cspan);
  out.perfect = cspan == span;
  return out;
}

namespace {

Subspace compute_descriptor(const LieAlgebra& g, const FlagDescriptor& d);

Subspace series_term(const std::vector<Subspace>& series, std::size_t idx) {
  return idx < series.size() ? series[idx] : series.back();
}

Subspace compute_descriptor(const LieAlgebra& g, const FlagDescriptor& d) {
  using T = FlagDescriptor::Type;
  switch (d.type) {
    case T::LcsTerm:
      if (d.k < 1 || !d.children.empty()) throw UnknownDescriptorError();
      return series_term(lower_central_series(g), static_cast<std::size_t>(d.k - 1));
    case T::DerivedTerm:
      if (d.k < 0 || !d.children.empty()) throw UnknownDescriptorError();
      return series_term(derived_series(g), static_cast<std::size_t>(d.k));
    case T::Center:
      if (!d.children.empty()) throw UnknownDescriptorError();
      return center(g);
    case T::Sum: {
      if (d.children.empty()) throw UnknownDescriptorError();
      Subspace acc = compute_descriptor(g, d.children.front());
      for (std::size_t i = 1; i < d.children.size(); ++i)
        acc = acc + compute_descriptor(g, d.children[i]);
      return acc;
    }
    case T::CentralizerOf:
      if (d.children.size() != 1) throw UnknownDescriptorError();
      return centralizer(g, compute_descriptor(g, d.children.front()));
    case T::BracketRankAtMost:
      throw UnknownDescriptorError();  // handled by the verifier, not computed
  }
  throw UnknownDescriptorError();
}

bool verify_rank_term(const LieAlgebra& g, const DerivationSpace& ds, const Subspace& term,
                      int bound) {
  const Index n = g.dim();
  // Every spanning vector satisfies the rank bound.
  for (Index i = 0; i < term.dim(); ++i) {
    if (rank(g.ad(QVec(term.basis().row(i).transpose()))) > bound) return false;
  }
  // Invariance under every derivation.
  for (Index r = 0; r < ds.all.dim(); ++r) {
    const QMat d = unvec_row_major(QVec(ds.all.basis().row(r).transpose()), n, n);
    for (Index i = 0; i < term.dim(); ++i) {
      if (!term.contains(QVec(d * QVec(term.basis().row(i).transpose())))) return false;
    }
  }
  // 64 deterministic pseudo-random vectors outside the term violate the bound.
  std::mt19937_64 rng(0x11e5'F1A6ULL);
  for (int s = 0; s < 64; ++s) {
    QVec v(n);
    int tries = 0;
    do {
      for (Index i = 0; i < n; ++i)
        v(i) = Rat(static_cast<long>(rng() % 13) - 6);
      if (++tries > 1000) return false;  // cannot sample outside: malformed term
    } while (term.contains(v));
    if (rank(g.ad(v)) <= bound) return false;
  }
  return true;
}

}  // namespace

bool verify_characteristic_flag(const LieAlgebra& g, const Flag& flag,
                                const std::vector<FlagDescriptor>& descriptors) {
  const Index n = g.dim();
  if (static_cast<Index>(flag.subspaces.size()) != n - 1)
    throw std::invalid_argument("flag must have terms of dimensions 1 .. n-1");
  for (std::size_t i = 0; i < flag.subspaces.size(); ++i) {
    const Subspace& s = flag.subspaces[i];
    if (s.ambient_dim() != n || s.dim() != static_cast<Index>(i) + 1)
      throw std::invalid_argument("flag must have terms of dimensions 1 .. n-1");
    if (i > 0 && !s.contains(flag.subspaces[i - 1]))
      throw std::invalid_argument("flag terms must be increasing");
  }
  if (descriptors.size() != flag.subspaces.size())
    throw std::invalid_argument("one descriptor per flag term required");

  const DerivationSpace ds = derivation_algebra(g);
  for (std::size_t i = 0; i < flag.subspaces.size(); ++i) {
    const FlagDescriptor& d = descriptors[i];
    if (d.type == FlagDescriptor::Type::BracketRankAtMost) {
      if (d.k < 0 || !d.children.empty()) throw UnknownDescriptorError();
      if (!verify_rank_term(g, ds, flag.subspaces[i], d.k)) return false;
    } else {
      if (compute_descriptor(g, d) != flag.subspaces[i]) return false;
    }
  }
  return true;
}

}  // namespace lie5
