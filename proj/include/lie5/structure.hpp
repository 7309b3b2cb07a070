#pragma once

#include <utility>
#include <vector>

#include "lie5/liealg.hpp"

/// Structure theory: nilradical with certification, coarse classification of
/// small nilpotent algebras, Jordan profiles of rational matrices, and the
/// 4-dimensional abelian ideal test.
namespace lie5 {

class NotSolvableError : public LieAlgebraError {
 public:
  NotSolvableError() : LieAlgebraError("algebra is not solvable") {}
};

class DimTooLargeError : public LieAlgebraError {
 public:
  explicit DimTooLargeError(Index dim)
      : LieAlgebraError("dimension " + std::to_string(dim) + " exceeds the supported range") {}
};

/// An internally computed object failed its independent certificate; this
/// indicates a logic error rather than bad input.
class CertificationError : public LieAlgebraError {
 public:
  using LieAlgebraError::LieAlgebraError;
};

/// The bracket-closed subspace s as a Lie algebra in the coordinates of its
/// canonical basis; throws std::invalid_argument when s is not a subalgebra.
LieAlgebra induced_algebra(const LieAlgebra& g, const Subspace& s,
                           const std::string& name_prefix = "b");

/// Nilradical of a solvable algebra via the trace-form radical of the
/// associative hull of the adjoint image.  The result is certified to be a
/// nilpotent ideal containing the derived algebra whose elements are all
/// ad-nilpotent; failure of the certificate throws CertificationError.
/// Throws NotSolvableError for non-solvable input.
Subspace nilradical(const LieAlgebra& g);

enum class NilpotentKind { Abelian, Heisenberg3, RplusN3, N4, Other };

struct NilpotentClass {
  NilpotentKind kind;
  Index dim;
  bool operator==(const NilpotentClass&) const = default;
};

std::string to_string(const NilpotentClass& c);

/// Isomorphism class of a nilpotent algebra of dimension at most 4.  Throws
/// NotNilpotentError / DimTooLargeError.
NilpotentClass classify_nilpotent_dim_le4(const LieAlgebra& g);

struct JordanProfile {
  Poly characteristic;
  Poly minimal;
  /// Total number of Jordan blocks over the algebraic closure.
  Index block_count = 0;
  /// Minimal polynomial squarefree.
  bool semisimple = false;
  /// Every eigenvalue real.
  bool all_real = false;
  /// Number of distinct real eigenvalues.
  int distinct_real_count = 0;
  /// For each irreducible factor of the characteristic polynomial (in
  /// canonical order): the block sizes, descending.  For a factor of degree d
  /// a "block" is a d-dimensional rational block; over the closure it splits
  /// into d conjugate blocks of the same size.
  std::vector<std::pair<Poly, std::vector<Index>>> blocks;

  bool operator==(const JordanProfile&) const = default;
};

JordanProfile jordan_profile(const QMat& a);

enum class TriState { Yes, No, Undecided };

std::string to_string(TriState t);

/// Whether a 5-dimensional nilpotent algebra contains a 4-dimensional abelian
/// ideal.  Throws std::invalid_argument unless dim g = 5 and g is nilpotent.
TriState has_4dim_abelian_ideal(const LieAlgebra& g);

}  // namespace lie5
