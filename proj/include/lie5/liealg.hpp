#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie5/qlinalg.hpp"
#include "lie5/rat.hpp"

/// Finite-dimensional Lie algebras over the rationals, given by structure
/// constants on an ordered basis.
namespace lie5 {

class LieAlgebraError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Jacobi identity failure; the witness is the 1-based ascending basis triple.
class JacobiError : public LieAlgebraError {
 public:
  JacobiError(std::array<int, 3> witness, std::string msg)
      : LieAlgebraError(std::move(msg)), witness_(witness) {}
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  std::array<int, 3> witness_;
};

class NotAnIdealError : public LieAlgebraError {
 public:
  NotAnIdealError() : LieAlgebraError("subspace is not an ideal") {}
};

class NotADerivationError : public LieAlgebraError {
 public:
  explicit NotADerivationError(std::size_t index)
      : LieAlgebraError("action " + std::to_string(index + 1) + " is not a derivation"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class ActionsDoNotCommuteError : public LieAlgebraError {
 public:
  ActionsDoNotCommuteError(std::size_t a, std::size_t b)
      : LieAlgebraError("actions " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " do not commute"),
        pair_{a, b} {}
  const std::array<std::size_t, 2>& pair() const { return pair_; }

 private:
  std::array<std::size_t, 2> pair_;
};

/// Structure constants: key (i, j) with i > j (0-based), value the coordinate
/// vector of [e_i, e_j].  Zero brackets need not be stored.
using BracketMap = std::map<std::pair<Index, Index>, QVec>;

struct ValidationResult {
  bool ok = true;
  /// 1-based ascending triple (i, j, k) of the first Jacobi failure, and the
  /// nonzero defect [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej].
  std::array<int, 3> witness{0, 0, 0};
  QVec defect;
};

class LieAlgebra {
 public:
  /// Validated constructor; throws std::invalid_argument for malformed data
  /// and JacobiError when the Jacobi identity fails.
  static LieAlgebra make(Index dim, std::vector<std::string> names, BracketMap brackets);

  /// Skips the Jacobi check (shape is still validated).  For validate() tests
  /// and internal use where the identity is known to hold.
  static LieAlgebra make_unchecked(Index dim, std::vector<std::string> names,
                                   BracketMap brackets);

  static LieAlgebra abelian(Index dim, const std::string& prefix = "e");

  Index dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const BracketMap& structure_constants() const { return brackets_; }

  /// [e_i, e_j] for any pair (antisymmetry is derived).
  QVec bracket(Index i, Index j) const;
  /// Bilinear extension.
  QVec bracket(const QVec& u, const QVec& v) const;
  /// Adjoint action ad(v) w = [v, w] as a matrix.
  QMat ad(const QVec& v) const;
  QMat ad(Index i) const;

 private:
  LieAlgebra(Index dim, std::vector<std::string> names, BracketMap brackets)
      : dim_(dim), names_(std::move(names)), brackets_(std::move(brackets)) {}

  static void check_shape(Index dim, const std::vector<std::string>& names,
                          const BracketMap& brackets);

  Index dim_;
  std::vector<std::string> names_;
  BracketMap brackets_;
};

/// Same dimension, basis names, and structure constants.
bool operator==(const LieAlgebra& a, const LieAlgebra& b);
inline bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

class NotARepresentationError : public LieAlgebraError {
 public:
  using LieAlgebraError::LieAlgebraError;
};

/// A module over a Lie algebra: one module_dim x module_dim matrix per basis
/// element, validated to satisfy rho([x,y]) = rho(x)rho(y) - rho(y)rho(x).
class Representation {
 public:
  /// Throws std::invalid_argument for malformed shapes and
  /// NotARepresentationError when the bracket compatibility fails.
  static Representation make(LieAlgebra algebra, Index module_dim, std::vector<QMat> matrices);

  /// The all-zero action.
  static Representation trivial(LieAlgebra algebra, Index module_dim);

  const LieAlgebra& algebra() const { return algebra_; }
  Index module_dim() const { return module_dim_; }
  const std::vector<QMat>& matrices() const { return matrices_; }
  const QMat& matrix(Index i) const { return matrices_.at(static_cast<std::size_t>(i)); }
  /// rho extended linearly.
  QMat of(const QVec& v) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.module_dim_ == b.module_dim_ &&
           a.matrices_ == b.matrices_;
  }
  friend bool operator!=(const Representation& a, const Representation& b) { return !(a == b); }

 private:
  Representation(LieAlgebra algebra, Index module_dim, std::vector<QMat> matrices)
      : algebra_(std::move(algebra)), module_dim_(module_dim), matrices_(std::move(matrices)) {}

  LieAlgebra algebra_;
  Index module_dim_;
  std::vector<QMat> matrices_;
};

/// Checks the Jacobi identity on all basis triples; on failure reports the
/// first ascending triple with its defect vector.
ValidationResult validate(const LieAlgebra& g);

/// span { [a, b] : a in A, b in B }.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// g = g^(0) >= g^(1) = [g^(0), g^(0)] >= ...; strictly decreasing terms
/// followed by the first repeated (stable) term.
std::vector<Subspace> derived_series(const LieAlgebra& g);

/// g = g^1 >= g^2 = [g, g^1] >= ...; same termination convention.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
/// tr ad(x) = 0 for all x.
bool is_unimodular(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
/// { x : [x, s] = 0 for all s in S }.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s);

struct QuotientResult {
  LieAlgebra algebra;
  /// 0-based indices of the standard basis vectors chosen as the complement
  /// (lexicographically earliest maximal independent set modulo the ideal).
  std::vector<Index> complement;
  /// (dim g / i) x (dim g) matrix of the projection in these coordinates.
  QMat projection;
};

/// Quotient by an ideal; throws NotAnIdealError otherwise.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// n x| R^k for commuting derivations D_1..D_k of n: [z_a, x] = D_a x,
/// [z_a, z_b] = 0.  New basis: the basis of n followed by "z" (k = 1) or
/// "z1".."zk".  Throws NotADerivationError / ActionsDoNotCommuteError.
LieAlgebra semidirect_sum(const LieAlgebra& n, const std::vector<QMat>& actions);

/// Trace of m restricted to an m-invariant subspace; throws
/// std::invalid_argument when s is not invariant.
Rat trace_on(const QMat& m, const Subspace& s);

/// Conjugacy class of a pair of commuting traceless 3x3 matrices spanning a
/// faithful abelian pair, in the standard list Phi1..Phi6; or the reason the
/// pair does not qualify.
enum class R2Class {
  Phi1,
  Phi2,
  Phi3,
  Phi4,
  Phi5,
  Phi6,
  NotFaithful,
  NotCommuting,
  NotTraceless,
};

std::string to_string(R2Class c);

R2Class r2_embedding_class(const QMat& m1, const QMat& m2);

/// Standard representative pair (images of the two generators) for each of
/// Phi1..Phi6; throws std::invalid_argument for the non-class values.
std::pair<QMat, QMat> r2_sl3_embedding(R2Class c);

}  // namespace lie5
