#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lie5/lattices.hpp"
#include "lie5/liealg.hpp"
#include "lie5/structure.hpp"

/// The classification as data: the ten solvable geometries with trivial
/// isotropy as generated Lie algebras, their distinguishing fingerprints, the
/// identification key, and the static isotropy / symmetric-space records.
namespace lie5 {

class UnknownGeometryError : public std::domain_error {
 public:
  explicit UnknownGeometryError(const std::string& name)
      : std::domain_error("unknown geometry: " + name) {}
};

class InvalidParamsError : public std::domain_error {
 public:
  explicit InvalidParamsError(const std::string& what) : std::domain_error(what) {}
};

class InvalidAlgebraError : public LieAlgebraError {
 public:
  explicit InvalidAlgebraError(const std::string& what) : LieAlgebraError(what) {}
};

class PreconditionViolatedError : public std::invalid_argument {
 public:
  explicit PreconditionViolatedError(const std::string& what) : std::invalid_argument(what) {}
};

using Params = std::map<std::string, Rat>;

/// The isomorphism invariants that distinguish the ten catalog algebras.
/// Every field is computed exactly; equal fingerprints compare bit-equal.
/// Scale-sensitive fields (the action data) are stored in the canonical form
/// produced by canonical_action_profile / normalize_action_poly, so that the
/// fingerprint of a catalog algebra does not depend on the rational basis it
/// was presented in.
struct Fingerprint {
  bool solvable = false;
  bool nilpotent = false;
  std::vector<Index> lcs_dims;
  std::vector<Index> derived_dims;
  Index center_dim = 0;
  Index nilradical_dim = 0;
  NilpotentClass nilradical_class{NilpotentKind::Other, 0};
  Index centralizer_of_derived_dim = 0;
  bool centralizer_of_derived_abelian = false;
  /// Jordan data of ad(z) on the nilradical, z a complement generator;
  /// present only for solvable non-nilpotent algebras whose nilradical has
  /// codimension 1.
  std::optional<JordanProfile> action_profile;
  /// Scale-canonical characteristic polynomial of the action; present only
  /// when the action is traceless and semisimple with 4 distinct real
  /// eigenvalues (the diagonal family shape).
  std::optional<Poly> normalized_action_poly;
  /// Nilpotent 5-dimensional case only.
  std::optional<TriState> has_4dim_abelian_ideal;

  bool operator==(const Fingerprint&) const = default;
};

/// Computes every invariant of g.  Throws InvalidAlgebraError when g fails
/// validate().  Nilradical-derived fields are filled only for solvable input
/// (the identifier rejects non-solvable algebras before needing them).
Fingerprint fingerprint(const LieAlgebra& g);

/// Jordan profile of a 4x4 action matrix in scale-canonical form: the
/// eigenvalues are rescaled by the deterministic rational factor that
/// canonicalizes the characteristic polynomial, so rationally-rescaled
/// actions produce identical profiles.  When only the square of the factor
/// is rational (an eigenvalue-symmetric action), polynomials are rescaled
/// coefficient-wise and +-paired factors are merged into their quadratic
/// products.  Matrices that are not 4x4 are profiled without rescaling.
JordanProfile canonical_action_profile(const QMat& m);

/// Canonical representative of {s^4 p(x/s) : s real} for a monic quartic p
/// with zero x^3 coefficient, squarefree with 4 real roots; two such
/// polynomials are scale-equivalent iff their normalized forms are equal.
/// The representative equalizes the absolute values of the first two nonzero
/// non-leading coefficients and makes the odd-weight one positive; when the
/// x coefficient vanishes the x^2 coefficient becomes +-1 exactly.  Throws
/// PreconditionViolatedError.
Poly normalize_action_poly(const Poly& p);

struct GeometryRecord {
  /// Canonical label, e.g. "R4⋊R[x^4]".
  std::string name;
  /// Mubarakzyanov-style alias, e.g. "A_{5,2}".
  std::string patera_name;
  /// Parameter names accepted by the generator (empty for most entries).
  std::vector<std::string> param_names;
  Params default_params;
  /// Builds the algebra; throws InvalidParamsError on bad parameters.
  std::function<LieAlgebra(const Params&)> generator;
  /// fingerprint(generator(default_params)), precomputed.
  Fingerprint expected_fingerprint;
  /// Lattice-existence certificate: an explicit holonomy presentation, or
  /// the admissible integer quartic witnessing the diagonal family's model
  /// condition.
  std::variant<LatticePresentation, IntQuartic> lattice_certificate;
  /// Diagonal family only: admissibility of the recorded quartic.
  std::optional<bool> model_condition;
};

/// The ten catalog records, diagonal family counted once.  Static data,
/// built on first use, immutable thereafter.
const std::vector<GeometryRecord>& list_geometries();

/// Record lookup by canonical name or Patera alias.  Throws
/// UnknownGeometryError.
const GeometryRecord& geometry(const std::string& name_or_alias);

/// Generates the named algebra with exact rational structure constants.
/// Throws UnknownGeometryError / InvalidParamsError.
LieAlgebra emit(const std::string& name_or_alias, const Params& params = {});

enum class NotInCatalogReason {
  NotSolvable,
  NotUnimodular,
  AbelianInput,
  WrongDimension,
  UndecidedBranch,
  FingerprintMismatch,
};

std::string to_string(NotInCatalogReason r);

struct IdentifyMatch {
  std::string name;
  /// Scale-normalized parameters; filled for the diagonal family when the
  /// normalized eigenvalues are rational, empty otherwise.
  Params params;
  Fingerprint certificate;
  /// The branch labels passed on the way to the leaf, in order.
  std::vector<std::string> branch_trace;
};

struct NotInCatalog {
  NotInCatalogReason reason;
  /// Branch labels satisfied before the identification failed.
  std::vector<std::string> branch_trace;
  std::string detail;
};

using IdentifyOutcome = std::variant<IdentifyMatch, NotInCatalog>;

/// Runs the identification key: solvable -> unimodular -> nilpotent branch
/// (4-dimensional abelian ideal, then whether the fourth lower-central term
/// vanishes) or non-nilpotent branch (nilradical ℝ³ with the ℝ²-action
/// class, ℝ⁴ with the Jordan block count, or ℝ ⊕ 𝔫₃ with the center
/// dimension), then confirms the computed fingerprint against the catalog.
IdentifyOutcome identify(const LieAlgebra& g);

struct IsotropyRecord {
  std::string label;
  /// Parameter constraint for the S¹ family, empty otherwise.
  std::string parameters;
  /// Labels of the immediate subgroups in the inclusion diagram.
  std::vector<std::string> contains;
};

/// The closed connected subgroups of SO(5) with their inclusion edges.
const std::vector<IsotropyRecord>& isotropy_poset();

struct SymmetricSpaceRecord {
  std::string label;
};

/// The irreducible-isotropy geometries: the classical spaces and the two
/// other irreducible Riemannian symmetric spaces.
const std::vector<SymmetricSpaceRecord>& symmetric_spaces();

}  // namespace lie5
