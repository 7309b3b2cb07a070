#include "lie5/liealg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lie5 {

namespace {

QVec unit(Index dim, Index i) {
  QVec v = QVec::Zero(dim);
  v(i) = Rat(1);
  return v;
}

std::vector<std::string> default_names(Index dim, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (Index i = 1; i <= dim; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

void LieAlgebra::check_shape(Index dim, const std::vector<std::string>& names,
                             const BracketMap& brackets) {
  if (dim < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (static_cast<Index>(names.size()) != dim)
    throw std::invalid_argument("basis name count does not match dimension");
  std::set<std::string> seen;
  for (const std::string& n : names) {
    if (n.empty()) throw std::invalid_argument("basis names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate basis name: " + n);
  }
  for (const auto& [key, vec] : brackets) {
    const auto [i, j] = key;
    if (j < 0 || i >= dim || i <= j)
      throw std::invalid_argument("bracket indices must satisfy dim > i > j >= 0");
    if (vec.size() != dim)
      throw std::invalid_argument("bracket value has wrong dimension");
  }
}

LieAlgebra LieAlgebra::make_unchecked(Index dim, std::vector<std::string> names,
                                      BracketMap brackets) {
  if (names.empty() && dim > 0) names = default_names(dim, "e");
  check_shape(dim, names, brackets);
  // Canonical storage: drop zero brackets.
  for (auto it = brackets.begin(); it != brackets.end();) {
    if (it->second.isZero(Rat(0))) {
      it = brackets.erase(it);
    } else {
      ++it;
    }
  }
  return LieAlgebra(dim, std::move(names), std::move(brackets));
}

LieAlgebra LieAlgebra::make(Index dim, std::vector<std::string> names, BracketMap brackets) {
  LieAlgebra g = make_unchecked(dim, std::move(names), std::move(brackets));
  ValidationResult r = validate(g);
  if (!r.ok) {
    std::ostringstream msg;
    msg << "Jacobi identity fails on basis triple (" << r.witness[0] << ", " << r.witness[1]
        << ", " << r.witness[2] << ")";
    throw JacobiError(r.witness, msg.str());
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(Index dim, const std::string& prefix) {
  return make_unchecked(dim, default_names(dim, prefix), {});
}

QVec LieAlgebra::bracket(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::invalid_argument("bracket: index out of range");
  if (i == j) return QVec::Zero(dim_);
  const bool flip = i < j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return QVec::Zero(dim_);
  return flip ? QVec(-it->second) : it->second;
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("bracket: vector dimension mismatch");
  QVec out = QVec::Zero(dim_);
  for (const auto& [key, vec] : brackets_) {
    const auto [i, j] = key;
    const Rat c = u(i) * v(j) - u(j) * v(i);
    if (c != Rat(0)) out += c * vec;
  }
  return out;
}

QMat LieAlgebra::ad(Index i) const {
  QMat m = QMat::Zero(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) m.col(j) = bracket(i, j);
  return m;
}

QMat LieAlgebra::ad(const QVec& v) const {
  QMat m = QMat::Zero(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) m.col(j) = bracket(v, unit(dim_, j));
  return m;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim() == b.dim() && a.basis_names() == b.basis_names() &&
         a.structure_constants() == b.structure_constants();
}

Representation Representation::make(LieAlgebra algebra, Index module_dim,
                                    std::vector<QMat> matrices) {
  if (module_dim < 0) throw std::invalid_argument("module dimension must be nonnegative");
  if (static_cast<Index>(matrices.size()) != algebra.dim())
    throw std::invalid_argument("one action matrix per basis element required");
  for (const QMat& m : matrices) {
    if (m.rows() != module_dim || m.cols() != module_dim)
      throw std::invalid_argument("action matrix has wrong shape");
  }
  Representation rep(std::move(algebra), module_dim, std::move(matrices));
  for (Index i = 0; i < rep.algebra_.dim(); ++i) {
    for (Index j = 0; j < i; ++j) {
      const QMat lhs = rep.of(rep.algebra_.bracket(i, j));
      const QMat rhs = rep.matrices_[static_cast<std::size_t>(i)] *
                           rep.matrices_[static_cast<std::size_t>(j)] -
                       rep.matrices_[static_cast<std::size_t>(j)] *
                           rep.matrices_[static_cast<std::size_t>(i)];
      if (lhs != rhs)
        throw NotARepresentationError("bracket compatibility fails on basis pair (" +
                                      std::to_string(j + 1) + ", " + std::to_string(i + 1) + ")");
    }
  }
  return rep;
}

Representation Representation::trivial(LieAlgebra algebra, Index module_dim) {
  std::vector<QMat> mats(static_cast<std::size_t>(algebra.dim()),
                         QMat::Zero(module_dim, module_dim));
  return Representation(std::move(algebra), module_dim, std::move(mats));
}

QMat Representation::of(const QVec& v) const {
  if (v.size() != algebra_.dim()) throw std::invalid_argument("vector has wrong dimension");
  QMat out = QMat::Zero(module_dim_, module_dim_);
  for (Index i = 0; i < algebra_.dim(); ++i)
    out += matrices_[static_cast<std::size_t>(i)] * v(i);
  return out;
}

ValidationResult validate(const LieAlgebra& g) {
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        QVec defect = g.bracket(g.bracket(i, j), unit(n, k)) +
                      g.bracket(g.bracket(j, k), unit(n, i)) +
                      g.bracket(g.bracket(k, i), unit(n, j));
        if (!defect.isZero(Rat(0))) {
          ValidationResult r;
          r.ok = false;
          r.witness = {static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                       static_cast<int>(k) + 1};
          r.defect = std::move(defect);
          return r;
        }
      }
    }
  }
  return {};
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  const Index n = g.dim();
  if (a.ambient_dim() != n || b.ambient_dim() != n)
    throw std::invalid_argument("bracket_span: ambient dimension mismatch");
  QMat gens(a.dim() * b.dim(), n);
  Index r = 0;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) {
      gens.row(r++) = g.bracket(QVec(a.basis().row(i).transpose()),
                                QVec(b.basis().row(j).transpose()))
                          .transpose();
    }
  }
  return Subspace::span_rows(gens);
}

namespace {

std::vector<Subspace> series_until_stable(const LieAlgebra& g,
                                          const std::function<Subspace(const Subspace&)>& step) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (true) {
    Subspace next = step(out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  return series_until_stable(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace full = Subspace::full(g.dim());
  return series_until_stable(g, [&](const Subspace& s) { return bracket_span(g, full, s); });
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

bool is_abelian(const LieAlgebra& g) { return g.structure_constants().empty(); }

bool is_unimodular(const LieAlgebra& g) {
  for (Index i = 0; i < g.dim(); ++i) {
    if (g.ad(i).trace() != Rat(0)) return false;
  }
  return true;
}

Subspace center(const LieAlgebra& g) {
  const Index n = g.dim();
  QMat stacked(n * n, n);
  for (Index i = 0; i < n; ++i) stacked.middleRows(i * n, n) = g.ad(i);
  return Subspace::span_cols(kernel(stacked));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  const Index n = g.dim();
  if (s.ambient_dim() != n) throw std::invalid_argument("centralizer: ambient mismatch");
  if (s.dim() == 0) return Subspace::full(n);
  QMat stacked(s.dim() * n, n);
  for (Index i = 0; i < s.dim(); ++i)
    stacked.middleRows(i * n, n) = g.ad(QVec(s.basis().row(i).transpose()));
  return Subspace::span_cols(kernel(stacked));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (Index i = 0; i < g.dim(); ++i) {
    for (Index j = 0; j < s.dim(); ++j) {
      if (!s.contains(g.bracket(unit(g.dim(), i), QVec(s.basis().row(j).transpose()))))
        return false;
    }
  }
  return true;
}

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s) {
  for (Index i = 0; i < s.dim(); ++i) {
    for (Index j = i + 1; j < s.dim(); ++j) {
      if (!g.bracket(QVec(s.basis().row(i).transpose()), QVec(s.basis().row(j).transpose()))
               .isZero(Rat(0)))
        return false;
    }
  }
  return true;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  const Index n = g.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("quotient: ambient mismatch");
  if (!is_ideal(g, ideal)) throw NotAnIdealError();
  // Lexicographically earliest standard basis vectors independent modulo the
  // ideal.
  RrefBasis rb(n);
  for (Index r = 0; r < ideal.dim(); ++r) rb.insert(QVec(ideal.basis().row(r).transpose()));
  std::vector<Index> complement;
  for (Index c = 0; c < n; ++c) {
    if (rb.insert(unit(n, c))) complement.push_back(c);
  }
  const Index k = static_cast<Index>(complement.size());
  QMat basis_change(n, n);
  for (Index r = 0; r < ideal.dim(); ++r) basis_change.col(r) = ideal.basis().row(r).transpose();
  for (Index c = 0; c < k; ++c) basis_change.col(ideal.dim() + c) = unit(n, complement[c]);
  QMat inv = inverse(basis_change);
  QMat projection = inv.bottomRows(k);
  BracketMap brackets;
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < a; ++b) {
      QVec w = projection * g.bracket(complement[a], complement[b]);
      if (!w.isZero(Rat(0))) brackets[{a, b}] = w;
    }
  }
  std::vector<std::string> names;
  for (Index c : complement) names.push_back(g.basis_names()[static_cast<std::size_t>(c)]);
  return QuotientResult{LieAlgebra::make(k, std::move(names), std::move(brackets)),
                        std::move(complement), std::move(projection)};
}

namespace {

std::vector<std::string> merged_names(const std::vector<std::string>& a,
                                      std::vector<std::string> b) {
  std::set<std::string> used(a.begin(), a.end());
  for (std::string& name : b) {
    while (used.count(name)) name += "'";
    used.insert(name);
  }
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index na = a.dim(), nb = b.dim(), n = na + nb;
  BracketMap brackets;
  for (const auto& [key, vec] : a.structure_constants()) {
    QVec v = QVec::Zero(n);
    v.head(na) = vec;
    brackets[key] = std::move(v);
  }
  for (const auto& [key, vec] : b.structure_constants()) {
    QVec v = QVec::Zero(n);
    v.tail(nb) = vec;
    brackets[{key.first + na, key.second + na}] = std::move(v);
  }
  return LieAlgebra::make_unchecked(n, merged_names(a.basis_names(), b.basis_names()),
                                    std::move(brackets));
}

LieAlgebra semidirect_sum(const LieAlgebra& n, const std::vector<QMat>& actions) {
  const Index m = n.dim();
  const Index k = static_cast<Index>(actions.size());
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const QMat& d = actions[a];
    if (d.rows() != m || d.cols() != m)
      throw std::invalid_argument("semidirect_sum: action has wrong shape");
    for (Index i = 0; i < m; ++i) {
      for (Index j = i + 1; j < m; ++j) {
        QVec lhs = d * n.bracket(i, j);
        QVec rhs = n.bracket(QVec(d.col(i)), unit(m, j)) + n.bracket(unit(m, i), QVec(d.col(j)));
        if (lhs != rhs) throw NotADerivationError(a);
      }
    }
  }
  for (std::size_t a = 0; a < actions.size(); ++a) {
    for (std::size_t b = a + 1; b < actions.size(); ++b) {
      if (actions[a] * actions[b] != actions[b] * actions[a])
        throw ActionsDoNotCommuteError(a, b);
    }
  }
  const Index dim = m + k;
  BracketMap brackets;
  for (const auto& [key, vec] : n.structure_constants()) {
    QVec v = QVec::Zero(dim);
    v.head(m) = vec;
    brackets[key] = std::move(v);
  }
  for (Index a = 0; a < k; ++a) {
    for (Index i = 0; i < m; ++i) {
      QVec v = QVec::Zero(dim);
      v.head(m) = actions[static_cast<std::size_t>(a)].col(i);
      if (!v.isZero(Rat(0))) brackets[{m + a, i}] = std::move(v);
    }
  }
  std::vector<std::string> znames;
  if (k == 1) {
    znames.push_back("z");
  } else {
    for (Index a = 1; a <= k; ++a) znames.push_back("z" + std::to_string(a));
  }
  return LieAlgebra::make(dim, merged_names(n.basis_names(), std::move(znames)),
                          std::move(brackets));
}

Rat trace_on(const QMat& m, const Subspace& s) {
  if (m.rows() != m.cols() || m.rows() != s.ambient_dim())
    throw std::invalid_argument("trace_on: dimension mismatch");
  QMat basis_t = s.basis().transpose();
  Rat tr(0);
  for (Index i = 0; i < s.dim(); ++i) {
    QVec w = m * QVec(s.basis().row(i).transpose());
    auto coords = solve(basis_t, w);
    if (!coords) throw std::invalid_argument("trace_on: subspace is not invariant");
    tr += (*coords)(i);
  }
  return tr;
}

std::string to_string(R2Class c) {
  switch (c) {
    case R2Class::Phi1: return "Phi1";
    case R2Class::Phi2: return "Phi2";
    case R2Class::Phi3: return "Phi3";
    case R2Class::Phi4: return "Phi4";
    case R2Class::Phi5: return "Phi5";
    case R2Class::Phi6: return "Phi6";
    case R2Class::NotFaithful: return "NotFaithful";
    case R2Class::NotCommuting: return "NotCommuting";
    case R2Class::NotTraceless: return "NotTraceless";
  }
  return "?";
}

R2Class r2_embedding_class(const QMat& m1, const QMat& m2) {
  if (m1.rows() != 3 || m1.cols() != 3 || m2.rows() != 3 || m2.cols() != 3)
    throw std::invalid_argument("r2_embedding_class: matrices must be 3x3");
  {
    QMat span(2, 9);
    span.row(0) = vec_row_major(m1).transpose();
    span.row(1) = vec_row_major(m2).transpose();
    if (rank(span) < 2) return R2Class::NotFaithful;
  }
  if (m1.trace() != Rat(0) || m2.trace() != Rat(0)) return R2Class::NotTraceless;
  if (m1 * m2 != m2 * m1) return R2Class::NotCommuting;

  // The span consists of nilpotent matrices iff tr(m^2) and tr(m^3) vanish
  // identically; expand in the coefficients of a*m1 + b*m2.
  const QMat m11 = m1 * m1, m12 = m1 * m2, m22 = m2 * m2;
  const bool all_nilpotent =
      m11.trace() == Rat(0) && m12.trace() == Rat(0) && m22.trace() == Rat(0) &&
      (m11 * m1).trace() == Rat(0) && (m11 * m2).trace() == Rat(0) &&
      (m12 * m2).trace() == Rat(0) && (m22 * m2).trace() == Rat(0);

  // Sample directions: more than any possible number of exceptional lines in
  // the parameter plane, so at least one sample is generic.
  std::vector<QMat> samples;
  for (long t : {0L, 1L, 2L, 3L, 5L, 7L}) samples.push_back(m1 + Rat(t) * m2);
  samples.push_back(m2);

  if (all_nilpotent) {
    Index max_rank = 0;
    for (const QMat& s : samples) max_rank = std::max(max_rank, rank(s));
    if (max_rank == 2) return R2Class::Phi1;
    QMat joint(3, 6);
    joint.leftCols(3) = m1;
    joint.rightCols(3) = m2;
    return rank(joint) == 2 ? R2Class::Phi2 : R2Class::Phi3;
  }

  int max_deg = 0;
  Poly generic_sf;
  for (const QMat& s : samples) {
    Poly sf = squarefree_part(char_poly(s));
    if (sf.degree() > max_deg) {
      max_deg = sf.degree();
      generic_sf = sf;
    }
  }
  if (max_deg == 3) return sturm_count(generic_sf) == 3 ? R2Class::Phi6 : R2Class::Phi5;
  return R2Class::Phi4;
}

std::pair<QMat, QMat> r2_sl3_embedding(R2Class c) {
  QMat a = QMat::Zero(3, 3), b = QMat::Zero(3, 3);
  switch (c) {
    case R2Class::Phi1:
      a(0, 1) = Rat(1);
      a(1, 2) = Rat(1);
      b(0, 2) = Rat(1);
      return {a, b};
    case R2Class::Phi2:
      a(0, 2) = Rat(1);
      b(1, 2) = Rat(1);
      return {a, b};
    case R2Class::Phi3:
      a(0, 1) = Rat(1);
      b(0, 2) = Rat(1);
      return {a, b};
    case R2Class::Phi4:
      a(0, 0) = Rat(1);
      a(1, 1) = Rat(1);
      a(2, 2) = Rat(-2);
      b(0, 1) = Rat(1);
      return {a, b};
    case R2Class::Phi5:
      a(0, 0) = Rat(1);
      a(1, 1) = Rat(1);
      a(2, 2) = Rat(-2);
      b(0, 1) = Rat(1);
      b(1, 0) = Rat(-1);
      return {a, b};
    case R2Class::Phi6:
      a(0, 0) = Rat(1);
      a(2, 2) = Rat(-1);
      b(1, 1) = Rat(1);
      b(2, 2) = Rat(-1);
      return {a, b};
    default:
      throw std::invalid_argument("r2_sl3_embedding: not a class value");
  }
}

}  // namespace lie5
