#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lie5/liealg.hpp"

/// The Chevalley-Eilenberg complex of a module, cohomology dimensions, and
/// extensions built from 2-cocycles.
namespace lie5 {

class NotACocycleError : public LieAlgebraError {
 public:
  NotACocycleError() : LieAlgebraError("value map is not a 2-cocycle") {}
};

class UnsupportedShapeError : public LieAlgebraError {
 public:
  using LieAlgebraError::LieAlgebraError;
};

Index binomial(Index n, Index k);

/// The k-element subsets of {0, .., n-1} in lexicographic order.
std::vector<std::vector<Index>> lex_subsets(Index n, Index k);

/// boundaries[p] is d_p : C^p -> C^{p+1} for p = 0 .. n-1, where the
/// p-cochain space has one coordinate per (lexicographic p-subset, module
/// coordinate) pair, subsets outermost.
struct CochainComplex {
  LieAlgebra algebra;
  Representation rep;
  std::vector<QMat> boundaries;

  /// binom(n, p) * module_dim; zero for p outside [0, n].
  Index cochain_dim(Index p) const;
  /// d_p, extended by zero maps outside the stored range.
  QMat boundary(Index p) const;
};

/// Builds every boundary map of the complex:
///   (dc)(x_1, .., x_{p+1}) = sum_{a<b} (-1)^{a+b} c([x_a, x_b], .., ^a, ^b, ..)
///                          + sum_a (-1)^{a+1} rho(x_a) c(.., ^a, ..).
CochainComplex ce_complex(const LieAlgebra& g, const Representation& rep);

/// dim ker d_p - rank d_{p-1}, exact.  Requires 0 <= p <= dim g.
Index cohomology_dim(const LieAlgebra& g, const Representation& rep, Index p);

/// An alternating module-valued 2-form on the representation's algebra: the
/// pair (i, j) with i < j holds c(e_i, e_j); missing pairs are zero.
struct Cocycle2 {
  Representation rep;
  std::map<std::pair<Index, Index>, QVec> value_on_pairs;
};

/// d_2(c) = 0, checked against the complex.  Throws std::invalid_argument
/// for out-of-order or out-of-range pair keys or wrongly sized values.
bool is_cocycle(const Cocycle2& c);

/// The extension R^m -> g -> R^k of an abelian base acting on R^m through
/// rep, twisted by the cocycle:
///   [(k1, q1), (k2, q2)] = (rho(q1) k2 - rho(q2) k1 + c(q1, q2), 0).
/// Basis: the module e1..em first, then the base z1..zk.  With c = 0 the
/// result equals semidirect_sum(R^m, rep.matrices()) exactly.  Throws
/// UnsupportedShapeError for a non-abelian base and NotACocycleError when
/// the cocycle invariant fails.
LieAlgebra extension_from_cocycle(const Representation& rep, const Cocycle2& c);

}  // namespace lie5
