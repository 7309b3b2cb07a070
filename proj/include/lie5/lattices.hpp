#pragma once

#include <array>
#include <string>
#include <vector>

#include "lie5/numeric.hpp"
#include "lie5/poly.hpp"
#include "lie5/qlinalg.hpp"

/// Lattice-existence certificates: integer characteristic-polynomial
/// admissibility, explicit holonomy presentations, and the Dirichlet-unit
/// construction over totally real cubic fields.
namespace lie5 {

class NotIntegralError : public std::domain_error {
 public:
  NotIntegralError() : std::domain_error("matrix entries must be integers") {}
};

class NotUnimodularMatrixError : public std::domain_error {
 public:
  NotUnimodularMatrixError() : std::domain_error("matrix determinant must be +1 or -1") {}
};

class NotAUnitError : public std::domain_error {
 public:
  NotAUnitError() : std::domain_error("element is not a unit of the order") {}
};

class DependentUnitsError : public std::domain_error {
 public:
  DependentUnitsError() : std::domain_error("unit logarithms are multiplicatively dependent") {}
};

/// Raised when interval refinement hits its floor without certifying either
/// independence or an exact multiplicative relation.
class CertificationFailure : public std::runtime_error {
 public:
  explicit CertificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Default certified-enclosure width, overridable per call.
inline Rat default_interval_width() { return Rat(1, 65536); }

/// x^4 + a x^3 + b x^2 + c x + 1; the fixed constant term is the
/// determinant-one constraint on the holonomy.
struct IntQuartic {
  BigInt a = 0;
  BigInt b = 0;
  BigInt c = 0;

  Poly poly() const;
};

struct AdmissibilityResult {
  bool admissible = false;
  /// Every failed criterion, drawn from "repeated roots", "complex roots",
  /// "nonpositive roots".
  std::vector<std::string> reasons;
};

/// Admissible iff squarefree with four distinct positive real roots.
AdmissibilityResult admissible_quartic(const IntQuartic& q);

enum class LatticeKind { Z4_by_Z, Z3_by_Z2, NilLattice };

std::string to_string(LatticeKind k);

struct LatticePresentation {
  LatticeKind kind = LatticeKind::Z4_by_Z;
  /// Integer matrices of determinant +-1; exactly two, commuting, for
  /// Z3_by_Z2.
  std::vector<QMat> holonomy;
  /// Provenance text.
  std::string note;
};

/// Wraps one integer unimodular matrix as the holonomy of Z^n x| Z.  Throws
/// NotIntegralError / NotUnimodularMatrixError.
LatticePresentation lattice_from_integer_matrix(const QMat& m, LatticeKind kind,
                                                std::string note = "");

/// A totally real cubic field Q[x]/(p): p monic, integer, irreducible (no
/// rational root), three distinct real roots.  unit_exprs are candidate
/// units recorded with the field; they are not validated on construction.
class NumberFieldData {
 public:
  /// Throws std::invalid_argument when the polynomial fails an invariant.
  static NumberFieldData make(Poly defining_poly, std::vector<Poly> unit_exprs = {});

  const Poly& defining_poly() const { return poly_; }
  const std::vector<Poly>& unit_exprs() const { return units_; }

 private:
  NumberFieldData(Poly p, std::vector<Poly> u) : poly_(std::move(p)), units_(std::move(u)) {}

  Poly poly_;
  std::vector<Poly> units_;
};

/// True iff resultant(defining_poly, u) = +-1 (the norm test).  Requires
/// deg u < 3.
bool unit_check(const NumberFieldData& nf, const Poly& u);

/// Integer matrix of multiplication by u^power on the basis (1, alpha,
/// alpha^2), exact arithmetic modulo the defining polynomial.  Requires
/// power >= 0; throws NotAUnitError when unit_check fails.
QMat unit_action_matrix(const NumberFieldData& nf, const Poly& u, long power);

/// Certified enclosures of log|u(r_i)| at the three real roots r_1 < r_2 <
/// r_3 of the defining polynomial; each enclosure has width <= width.
/// Throws NotAUnitError when unit_check fails.
std::array<QInterval, 3> log_embedding(const NumberFieldData& nf, const Poly& u,
                                       const Rat& width = default_interval_width());

/// O_K x| 2U for two multiplicatively independent units: holonomy is the two
/// squared action matrices.  Independence is certified by a 2x2 minor of the
/// log-embedding matrix excluding zero; when refinement down to width 2^-64
/// fails to certify, an exact relation u1^a = +-u2^b (|a|, |b| <= 8) is
/// searched for and reported as DependentUnitsError, else
/// CertificationFailure.
LatticePresentation dirichlet_lattice(const NumberFieldData& nf, const Poly& u1, const Poly& u2);

/// Certificate data for the rank-one solvable holonomy matrix
/// [[1,0,0,0],[d,1,0,0],[0,0,1,1],[0,0,1,2]], d in {0, 1}, whose lower 2x2
/// block realizes exp(s A) for A = [[-1,2],[2,1]] at s = ln((3+sqrt5)/2)/sqrt5.
struct Sol41BlockReport {
  /// The d = 0 and d = 1 matrices, in that order.
  std::vector<QMat> matrices;
  bool integral = false;
  bool unimodular = false;
  /// char(B) = x^2 - 3x + 1 and det B = 1 for the lower block B.
  bool block_charpoly_ok = false;
  bool block_det_ok = false;
  /// Eigenvalue logs of B certified equal to +-(s * sqrt5) at the given width.
  bool logs_match = false;
  /// Enclosure of s = ln((3+sqrt5)/2)/sqrt5.
  QInterval s;
  /// Enclosure of ln((3+sqrt5)/2)/ln(sqrt5), the variant some sources print.
  QInterval s_printed;
  /// s_printed - s; nonzero certifies that the two disagree.
  QInterval discrepancy;
  bool discrepancy_nonzero = false;
};

Sol41BlockReport sol41_block_check(const Rat& width = default_interval_width());

}  // namespace lie5
