#pragma once

#include <string>
#include <vector>

#include "lie5/liealg.hpp"

/// Derivation algebras, inner/outer/traceless-outer quotients, and
/// characteristic-flag verification.
namespace lie5 {

/// der(g) data in the n^2-dimensional matrix space (row-major vectorization).
struct DerivationSpace {
  Index dim_g = 0;
  /// All derivations, as a canonical subspace of R^{n^2}.
  Subspace all = Subspace::zero(0);
  /// Inner derivations span{ ad x }.
  Subspace inner = Subspace::zero(0);
  /// Canonical representatives of the traceless outer classes: the traceless
  /// derivation space reduced modulo the (traceless) inner derivations by
  /// echelon reduction in row-major entry order.
  std::vector<QMat> sout_representatives;
};

/// Solves the Leibniz system D[x,y] = [Dx,y] + [x,Dy] over all basis pairs.
DerivationSpace derivation_algebra(const LieAlgebra& g);

/// A matrix shape with free slots: the set { sum_i t_i * parameters[i] },
/// optionally constrained to act tracelessly on the listed subspaces.
struct SoutPattern {
  std::vector<QMat> parameters;
  std::vector<Subspace> traceless_on;
};

/// True iff every traceless outer class satisfying the pattern's trace
/// constraints has a representative in the pattern (and the parameters are
/// themselves such derivations), and the parameter count equals the dimension
/// of the constrained traceless-outer space.
bool sout_matches_parametrization(const LieAlgebra& g, const SoutPattern& pattern);

struct ClosureCheck {
  /// All pairwise commutators lie in the span.
  bool closed = false;
  /// The commutator span equals the span.
  bool perfect = false;
};

ClosureCheck bracket_closure_check(const std::vector<QMat>& mats);

/// A complete flag: strictly increasing subspaces of dimensions 1 .. n-1.
struct Flag {
  std::vector<Subspace> subspaces;
};

class UnknownDescriptorError : public LieAlgebraError {
 public:
  UnknownDescriptorError() : LieAlgebraError("malformed flag descriptor") {}
};

/// Characterization of one flag term.
struct FlagDescriptor {
  enum class Type {
    /// k-th lower central series term, 1-based (k = 1 is g itself).
    LcsTerm,
    /// k-th derived series term, 0-based (k = 0 is g itself).
    DerivedTerm,
    Center,
    /// Sum of the children's subspaces.
    Sum,
    /// Centralizer of the single child's subspace.
    CentralizerOf,
    /// The set { x : dim [x, g] <= k }; verified by sampling, not solved.
    BracketRankAtMost,
  };

  Type type = Type::Center;
  int k = 0;
  std::vector<FlagDescriptor> children;

  static FlagDescriptor lcs(int k) { return {Type::LcsTerm, k, {}}; }
  static FlagDescriptor derived(int k) { return {Type::DerivedTerm, k, {}}; }
  static FlagDescriptor center() { return {Type::Center, 0, {}}; }
  static FlagDescriptor sum(std::vector<FlagDescriptor> children) {
    return {Type::Sum, 0, std::move(children)};
  }
  static FlagDescriptor centralizer_of(FlagDescriptor child) {
    return {Type::CentralizerOf, 0, {std::move(child)}};
  }
  static FlagDescriptor bracket_rank_at_most(int k) {
    return {Type::BracketRankAtMost, k, {}};
  }
};

/// Checks that each flag term equals the subspace its descriptor computes.
/// BracketRankAtMost terms are verified (rank bound on spanning vectors,
/// invariance under all derivations, 64 deterministic pseudo-random vectors
/// outside the term violating the bound) rather than solved.  Throws
/// std::invalid_argument for a malformed flag and UnknownDescriptorError for a
/// malformed descriptor.
bool verify_characteristic_flag(const LieAlgebra& g, const Flag& flag,
                                const std::vector<FlagDescriptor>& descriptors);

}  // namespace lie5
