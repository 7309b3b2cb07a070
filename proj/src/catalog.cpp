#include "lie5/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "lie5/poly.hpp"
#include "lie5/qlinalg.hpp"

namespace lie5 {

namespace {

// Deterministic factor ordering: degree, then coefficients from the top down.
bool factor_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

Rat rat_pow(const Rat& base, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// p with every root multiplied by sqrt(sigma), when that has rational
// coefficients: coefficient k picks up sigma^((deg-k)/2), so every nonzero
// coefficient must sit at even distance from the leading one.
std::optional<Poly> sigma_scale(const Poly& p, const Rat& sigma) {
  const int deg = p.degree();
  if (deg < 0) return p;
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  for (int k = deg; k >= 0; --k) {
    const Rat c = p.coeff(k);
    if (c == Rat(0)) continue;
    const int w = deg - k;
    if (w % 2 != 0) return std::nullopt;
    v[static_cast<std::size_t>(k)] = c * rat_pow(sigma, w / 2);
  }
  return Poly(v);
}

// Monic polynomial whose roots are the negatives of p's.
Poly negate_roots(const Poly& p) {
  const int deg = p.degree();
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  for (int k = 0; k <= deg; ++k) {
    const Rat c = p.coeff(k);
    v[static_cast<std::size_t>(k)] = (deg - k) % 2 == 0 ? c : -c;
  }
  return Poly(v);
}

// Rescales the eigenvalue data of a profile by sqrt(sigma) when sigma is not
// a rational square.  Polynomials with only even-distance coefficients scale
// exactly; factors that do not scale are merged with their sign-mirror
// partner (the product has symmetric roots, so it always scales).  Anything
// still unscaled is kept as computed.
JordanProfile sigma_scaled_profile(JordanProfile jp, const Rat& sigma) {
  if (auto c = sigma_scale(jp.characteristic, sigma)) jp.characteristic = *c;
  if (auto m = sigma_scale(jp.minimal, sigma)) jp.minimal = *m;
  std::vector<std::pair<Poly, std::vector<Index>>> out;
  std::vector<bool> used(jp.blocks.size(), false);
  for (std::size_t i = 0; i < jp.blocks.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto& [f, sizes] = jp.blocks[i];
    if (auto sf = sigma_scale(f, sigma)) {
      out.emplace_back(*sf, sizes);
      continue;
    }
    const Poly mirror = negate_roots(f);
    bool merged = false;
    for (std::size_t j = i + 1; j < jp.blocks.size(); ++j) {
      if (used[j] || jp.blocks[j].first != mirror || jp.blocks[j].second != sizes) continue;
      if (auto prod = sigma_scale(f * mirror, sigma)) {
        out.emplace_back(*prod, sizes);
        used[j] = true;
        merged = true;
      }
      break;
    }
    if (!merged) out.emplace_back(f, sizes);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  jp.blocks = std::move(out);
  return jp;
}

// Block sizes over the algebraic closure: each size under a degree-d factor
// stands for d conjugate blocks.
std::vector<Index> closure_sizes(const JordanProfile& jp) {
  std::vector<Index> out;
  for (const auto& [f, sizes] : jp.blocks) {
    for (const Index s : sizes) {
      for (int copy = 0; copy < f.degree(); ++copy) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Profile comparison for leaf confirmation.  Canonical polynomials compare
// exactly; factor lists compare through their closure block sizes, since a
// presentation with irrational eigenvalue ratios can leave a rationally
// irreducible factor where the catalog entry has split linear ones.
bool profiles_equivalent(const JordanProfile& a, const JordanProfile& b) {
  return a.semisimple == b.semisimple && a.all_real == b.all_real &&
         a.distinct_real_count == b.distinct_real_count && a.block_count == b.block_count &&
         a.characteristic == b.characteristic && a.minimal == b.minimal &&
         closure_sizes(a) == closure_sizes(b);
}

// Fingerprint equality with the action profile relaxed to equivalence.
bool fingerprints_match(const Fingerprint& a, const Fingerprint& b) {
  if (a.action_profile.has_value() != b.action_profile.has_value()) return false;
  if (a.action_profile && !profiles_equivalent(*a.action_profile, *b.action_profile)) return false;
  Fingerprint x = a;
  Fingerprint y = b;
  x.action_profile.reset();
  y.action_profile.reset();
  return x == y;
}

QVec unit_vec(Index n, Index i) {
  QVec v = QVec::Zero(n);
  v(i) = Rat(1);
  return v;
}

void require_params(const Params& params, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) throw InvalidParamsError("unknown parameter: " + key);
  }
}

Rat param_or(const Params& params, const std::string& key, const Rat& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

using Terms = std::initializer_list<std::pair<Index, Rat>>;

void put_bracket(BracketMap& bm, Index i, Index j, Terms terms) {
  QVec v = QVec::Zero(5);
  for (const auto& [k, c] : terms) v(k) = c;
  bm[{i, j}] = v;
}

LieAlgebra make_nil4xe(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 4, 1, {{0, Rat(1)}});
  put_bracket(bm, 4, 2, {{1, Rat(1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "z"}, bm);
}

LieAlgebra make_r4_x4(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 4, 1, {{0, Rat(1)}});
  put_bracket(bm, 4, 2, {{1, Rat(1)}});
  put_bracket(bm, 4, 3, {{2, Rat(1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "z"}, bm);
}

LieAlgebra make_nil4_r_31(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 3, 2, {{1, Rat(1)}});
  put_bracket(bm, 3, 1, {{0, Rat(1)}});
  put_bracket(bm, 4, 2, {{0, Rat(1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "x5"}, bm);
}

LieAlgebra make_nil4_r_431(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 3, 2, {{1, Rat(1)}});
  put_bracket(bm, 3, 1, {{0, Rat(1)}});
  put_bracket(bm, 4, 2, {{0, Rat(1)}});
  put_bracket(bm, 4, 3, {{2, Rat(1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "x5"}, bm);
}

LieAlgebra make_sol41xe(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 3, 2, {{1, Rat(1)}});
  put_bracket(bm, 4, 2, {{2, Rat(1)}});
  put_bracket(bm, 4, 3, {{3, Rat(-1)}});
  return LieAlgebra::make(5, {"y", "x1", "x2", "x3", "z"}, bm);
}

LieAlgebra make_heis_lorentz(const Params& params) {
  require_params(params, {"d"});
  const Rat d = param_or(params, "d", Rat(1));
  if (d == Rat(0))
    throw InvalidParamsError("d must be nonzero (d = 0 is the Sol41×E entry)");
  BracketMap bm;
  put_bracket(bm, 3, 2, {{1, Rat(1)}});
  put_bracket(bm, 4, 2, {{2, Rat(1)}});
  put_bracket(bm, 4, 3, {{3, Rat(-1)}});
  put_bracket(bm, 4, 0, {{1, d}});
  return LieAlgebra::make(5, {"y", "x1", "x2", "x3", "z"}, bm);
}

LieAlgebra make_r4_x2_pm1(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 4, 1, {{0, Rat(1)}});
  put_bracket(bm, 4, 2, {{2, Rat(1)}});
  put_bracket(bm, 4, 3, {{3, Rat(-1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "z"}, bm);
}

LieAlgebra make_r4_jordan_pm1(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 4, 0, {{0, Rat(1)}});
  put_bracket(bm, 4, 1, {{0, Rat(1)}, {1, Rat(1)}});
  put_bracket(bm, 4, 2, {{2, Rat(-1)}});
  put_bracket(bm, 4, 3, {{2, Rat(1)}, {3, Rat(-1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "z"}, bm);
}

LieAlgebra make_r4_diag(const Params& params) {
  require_params(params, {"a", "b", "c"});
  const Rat a = param_or(params, "a", Rat(1));
  const Rat b = param_or(params, "b", Rat(2));
  const Rat c = param_or(params, "c", Rat(3));
  const Rat d = -(a + b + c);
  const std::array<Rat, 4> eig{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (eig[i] == eig[j])
        throw InvalidParamsError("eigenvalues a, b, c, -(a+b+c) must be pairwise distinct");
    }
  }
  BracketMap bm;
  for (Index i = 0; i < 4; ++i) put_bracket(bm, 4, i, {{i, eig[static_cast<std::size_t>(i)]}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "x4", "z"}, bm);
}

LieAlgebra make_r3_xyz(const Params& params) {
  require_params(params, {});
  BracketMap bm;
  put_bracket(bm, 3, 0, {{0, Rat(1)}});
  put_bracket(bm, 3, 2, {{2, Rat(-1)}});
  put_bracket(bm, 4, 1, {{1, Rat(1)}});
  put_bracket(bm, 4, 2, {{2, Rat(-1)}});
  return LieAlgebra::make(5, {"x1", "x2", "x3", "w1", "w2"}, bm);
}

QMat int_mat4(const std::array<std::array<int, 4>, 4>& rows) {
  QMat m(4, 4);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j)
      m(i, j) = Rat(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

// Lattice witness for a nilpotent entry: exp of six times the generating
// derivation is an integral automorphism in exponential coordinates (the
// factor 6 clears the Campbell-Hausdorff denominators in class <= 3).
LatticePresentation nil_certificate(const QMat& action, const std::string& note) {
  const QMat scaled = Rat(6) * action;
  return lattice_from_integer_matrix(exp_nilpotent(scaled), LatticeKind::NilLattice, note);
}

std::vector<GeometryRecord> build_catalog() {
  std::vector<GeometryRecord> out;

  const auto add = [&out](std::string name, std::string patera, std::vector<std::string> param_names,
                          Params defaults, LieAlgebra (*gen)(const Params&),
                          std::variant<LatticePresentation, IntQuartic> cert,
                          std::optional<bool> model_condition) {
    GeometryRecord rec;
    rec.name = std::move(name);
    rec.patera_name = std::move(patera);
    rec.param_names = std::move(param_names);
    rec.default_params = std::move(defaults);
    rec.generator = gen;
    rec.expected_fingerprint = fingerprint(gen(rec.default_params));
    rec.lattice_certificate = std::move(cert);
    rec.model_condition = model_condition;
    out.push_back(std::move(rec));
  };

  QMat a = QMat::Zero(4, 4);
  a(0, 1) = Rat(1);
  a(1, 2) = Rat(1);
  add("Nil4×E", "A_{4,1} ⊕ ℝ", {}, {}, make_nil4xe,
      nil_certificate(a, "exp(6 ad z) on the integral lattice of Nil4, times Z from the E factor"),
      std::nullopt);

  a = QMat::Zero(4, 4);
  a(0, 1) = Rat(1);
  a(1, 2) = Rat(1);
  a(2, 3) = Rat(1);
  add("R4⋊R[x^4]", "A_{5,2}", {}, {}, make_r4_x4,
      nil_certificate(a, "exp(6 ad z) acting on Z^4"), std::nullopt);

  a = QMat::Zero(4, 4);
  a(0, 2) = Rat(1);
  add("Nil4⋊R(3→1)", "A_{5,5}", {}, {}, make_nil4_r_31,
      nil_certificate(a, "exp(6 ad x5) on the integral lattice of Nil4"), std::nullopt);

  a = QMat::Zero(4, 4);
  a(0, 2) = Rat(1);
  a(2, 3) = Rat(1);
  add("Nil4⋊R(4→3→1)", "A_{5,6}", {}, {}, make_nil4_r_431,
      nil_certificate(a, "exp(6 ad x5) on the integral lattice of Nil4"), std::nullopt);

  add("Sol41×E", "A_{4,8} ⊕ ℝ", {}, {}, make_sol41xe,
      lattice_from_integer_matrix(
          int_mat4({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}}}),
          LatticeKind::Z4_by_Z,
          "time-one holonomy on the integer points of R x Heis3 in coordinates (y, x1, x2, x3)"),
      std::nullopt);

  add("Heis-Lorentz", "A^{0}_{5,20}", {"d"}, {{"d", Rat(1)}}, make_heis_lorentz,
      lattice_from_integer_matrix(
          int_mat4({{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}}}),
          LatticeKind::Z4_by_Z,
          "time-one holonomy on the integer points of R x Heis3 in coordinates (y, x1, x2, x3)"),
      std::nullopt);

  add("R4⋊R[x^2,x-1,x+1]", "A^{−1}_{5,8}", {}, {}, make_r4_x2_pm1,
      lattice_from_integer_matrix(
          int_mat4({{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}}}),
          LatticeKind::Z4_by_Z, "unipotent block times a hyperbolic block, acting on Z^4"),
      std::nullopt);

  add("R4⋊R[(x-1)^2,(x+1)^2]", "A^{−1}_{5,15}", {}, {}, make_r4_jordan_pm1,
      lattice_from_integer_matrix(
          int_mat4({{{2, 1, 2, 1}, {1, 1, 1, 1}, {0, 0, 2, 1}, {0, 0, 1, 1}}}),
          LatticeKind::Z4_by_Z,
          "holonomy with characteristic polynomial (x^2-3x+1)^2 and nontrivial Jordan structure"),
      std::nullopt);

  {
    const IntQuartic q{BigInt(-10), BigInt(23), BigInt(-10)};
    add("R4⋊R[diag]", "A^{a,b,c}_{5,7}", {"a", "b", "c"},
        {{"a", Rat(1)}, {"b", Rat(2)}, {"c", Rat(3)}}, make_r4_diag, q,
        admissible_quartic(q).admissible);
  }

  {
    const Poly cubic({Rat(1), Rat(-3), Rat(0), Rat(1)});
    const Poly u1 = Poly::x();
    const Poly u2 = Poly({Rat(1), Rat(-1)});
    const NumberFieldData nf = NumberFieldData::make(cubic, {u1, u2});
    add("R3⋊{xyz=1}^0", "A^{−1,−1}_{5,33}", {}, {}, make_r3_xyz,
        dirichlet_lattice(nf, u1, u2), std::nullopt);
  }

  return out;
}

std::string describe_class(const NilpotentClass& c) {
  return to_string(c);
}

}  // namespace

Poly normalize_action_poly(const Poly& p) {
  if (p.degree() != 4 || p.coeff(4) != Rat(1))
    throw PreconditionViolatedError("normalize_action_poly: expected a monic quartic");
  if (p.coeff(3) != Rat(0))
    throw PreconditionViolatedError("normalize_action_poly: cubic coefficient must vanish");
  if (!is_squarefree(p))
    throw PreconditionViolatedError("normalize_action_poly: polynomial must be squarefree");
  if (sturm_count(p) != 4)
    throw PreconditionViolatedError("normalize_action_poly: all four roots must be real");
  const Rat c2 = p.coeff(2);
  const Rat c1 = p.coeff(1);
  const Rat c0 = p.coeff(0);
  if (c1 != Rat(0)) {
    // Equalize |x^2| and |x| coefficients (falling back to the constant term
    // when the x^2 coefficient vanishes) and make the x coefficient positive.
    const Rat s = c2 != Rat(0) ? Rat(c1.sign()) * abs(c2) / abs(c1) : c1 / abs(c0);
    return scale_eigenvalues(p, s);
  }
  // Even quartic: only the square of the scale acts, so the x^2 coefficient
  // can be sent to exactly +-1.  Squarefreeness plus four real roots force
  // c2 != 0 here.
  const Rat sigma = Rat(1) / abs(c2);
  return Poly({c0 * sigma * sigma, Rat(0), Rat(c2.sign()), Rat(0), Rat(1)});
}

JordanProfile canonical_action_profile(const QMat& m) {
  if (m.rows() != 4 || m.cols() != 4) return jordan_profile(m);
  const Poly cp = char_poly(m);
  const Rat c3 = cp.coeff(3);
  const Rat c2 = cp.coeff(2);
  const Rat c1 = cp.coeff(1);
  const Rat c0 = cp.coeff(0);
  if (c3 != Rat(0)) {
    const QMat scaled = (Rat(-1) / c3) * m;
    return jordan_profile(scaled);
  }
  if (c1 != Rat(0)) {
    Rat s;
    if (c2 != Rat(0)) s = Rat(c1.sign()) * abs(c2) / abs(c1);
    else if (c0 != Rat(0)) s = c1 / abs(c0);
    else s = Rat(c1.sign());
    const QMat scaled = s * m;
    return jordan_profile(scaled);
  }
  // Even characteristic polynomial: the spectrum only determines the square
  // of the scale.
  Rat sigma(1);
  if (c2 != Rat(0) && c0 != Rat(0)) sigma = abs(c2) / abs(c0);
  else if (c2 != Rat(0)) sigma = Rat(1) / abs(c2);
  if (sigma == Rat(1)) return jordan_profile(m);
  if (is_square(sigma)) {
    const QMat scaled = sqrt_exact(sigma) * m;
    return jordan_profile(scaled);
  }
  return sigma_scaled_profile(jordan_profile(m), sigma);
}

Fingerprint fingerprint(const LieAlgebra& g) {
  const ValidationResult vr = validate(g);
  if (!vr.ok) {
    std::ostringstream os;
    os << "fingerprint: Jacobi identity fails on basis triple (" << vr.witness[0] << ", "
       << vr.witness[1] << ", " << vr.witness[2] << ")";
    throw InvalidAlgebraError(os.str());
  }
  Fingerprint fp;
  fp.solvable = is_solvable(g);
  fp.nilpotent = is_nilpotent(g);
  for (const Subspace& s : lower_central_series(g)) fp.lcs_dims.push_back(s.dim());
  const std::vector<Subspace> ds = derived_series(g);
  for (const Subspace& s : ds) fp.derived_dims.push_back(s.dim());
  fp.center_dim = center(g).dim();
  const Subspace derived = ds.size() > 1 ? ds[1] : Subspace::zero(g.dim());
  const Subspace cent = centralizer(g, derived);
  fp.centralizer_of_derived_dim = cent.dim();
  fp.centralizer_of_derived_abelian = is_abelian_subspace(g, cent);
  if (fp.solvable) {
    const Subspace nr = nilradical(g);
    fp.nilradical_dim = nr.dim();
    fp.nilradical_class = nr.dim() <= 4 ? classify_nilpotent_dim_le4(induced_algebra(g, nr))
                                        : NilpotentClass{NilpotentKind::Other, nr.dim()};
    if (!fp.nilpotent && nr.dim() == g.dim() - 1) {
      Index vi = 0;
      while (vi < g.dim() && nr.contains(unit_vec(g.dim(), vi))) ++vi;
      const QMat action = restriction(g.ad(vi), nr);
      fp.action_profile = canonical_action_profile(action);
      const JordanProfile& jp = *fp.action_profile;
      if (jp.characteristic.degree() == 4 && jp.characteristic.coeff(3) == Rat(0) &&
          jp.semisimple && jp.all_real && jp.distinct_real_count == 4) {
        fp.normalized_action_poly = normalize_action_poly(jp.characteristic);
      }
    }
  }
  if (fp.nilpotent && g.dim() == 5) fp.has_4dim_abelian_ideal = has_4dim_abelian_ideal(g);
  return fp;
}

const std::vector<GeometryRecord>& list_geometries() {
  static const std::vector<GeometryRecord> catalog = build_catalog();
  return catalog;
}

const GeometryRecord& geometry(const std::string& name_or_alias) {
  for (const GeometryRecord& rec : list_geometries()) {
    if (rec.name == name_or_alias || rec.patera_name == name_or_alias) return rec;
  }
  throw UnknownGeometryError(name_or_alias);
}

LieAlgebra emit(const std::string& name_or_alias, const Params& params) {
  return geometry(name_or_alias).generator(params);
}

std::string to_string(NotInCatalogReason r) {
  switch (r) {
    case NotInCatalogReason::NotSolvable: return "not solvable";
    case NotInCatalogReason::NotUnimodular: return "not unimodular";
    case NotInCatalogReason::AbelianInput: return "abelian input";
    case NotInCatalogReason::WrongDimension: return "wrong dimension";
    case NotInCatalogReason::UndecidedBranch: return "undecided branch";
    case NotInCatalogReason::FingerprintMismatch: return "fingerprint mismatch";
  }
  return "?";
}

namespace {

IdentifyOutcome leaf_match(const std::string& leaf, Fingerprint fp,
                           std::vector<std::string> trace) {
  const GeometryRecord& rec = geometry(leaf);
  if (!fingerprints_match(fp, rec.expected_fingerprint)) {
    return NotInCatalog{NotInCatalogReason::FingerprintMismatch, std::move(trace),
                        "reached " + leaf + " but the fingerprint differs"};
  }
  return IdentifyMatch{leaf, {}, std::move(fp), std::move(trace)};
}

}  // namespace

IdentifyOutcome identify(const LieAlgebra& g) {
  Fingerprint fp = fingerprint(g);
  std::vector<std::string> trace;
  if (g.dim() != 5) {
    return NotInCatalog{NotInCatalogReason::WrongDimension, trace,
                        "dimension " + std::to_string(g.dim()) + ", catalog covers dimension 5"};
  }
  if (!fp.solvable) {
    return NotInCatalog{NotInCatalogReason::NotSolvable, trace,
                        "the classification of solvable geometries does not apply"};
  }
  trace.push_back("solvable");
  if (!is_unimodular(g)) {
    return NotInCatalog{NotInCatalogReason::NotUnimodular, trace,
                        "a Lie group with a lattice must be unimodular"};
  }
  if (is_abelian(g)) {
    return NotInCatalog{NotInCatalogReason::AbelianInput, trace,
                        "the abelian algebra is the euclidean symmetric space, not a catalog entry"};
  }

  if (fp.nilpotent) {
    trace.push_back("nilpotent");
    const TriState ab4 = fp.has_4dim_abelian_ideal.value_or(TriState::Undecided);
    if (ab4 == TriState::Undecided) {
      return NotInCatalog{NotInCatalogReason::UndecidedBranch, trace,
                          "could not decide existence of a 4-dimensional abelian ideal"};
    }
    const bool g4 = fp.lcs_dims[std::min<std::size_t>(3, fp.lcs_dims.size() - 1)] > 0;
    if (ab4 == TriState::Yes) {
      trace.push_back("4-dim abelian ideal");
      trace.push_back(g4 ? "g^4 != 0" : "g^4 = 0");
      return leaf_match(g4 ? "R4⋊R[x^4]" : "Nil4×E", std::move(fp), std::move(trace));
    }
    trace.push_back("no 4-dim abelian ideal");
    trace.push_back(g4 ? "g^4 != 0" : "g^4 = 0");
    return leaf_match(g4 ? "Nil4⋊R(4→3→1)" : "Nil4⋊R(3→1)",
                      std::move(fp), std::move(trace));
  }

  trace.push_back("non-nilpotent");
  const NilpotentClass nc = fp.nilradical_class;

  if (nc == NilpotentClass{NilpotentKind::Abelian, 3}) {
    trace.push_back("nilradical R^3");
    const Subspace nr = nilradical(g);
    std::vector<QMat> actions;
    Subspace seen = nr;
    for (Index i = 0; i < g.dim() && actions.size() < 2; ++i) {
      const QVec v = unit_vec(g.dim(), i);
      if (seen.contains(v)) continue;
      actions.push_back(restriction(g.ad(i), nr));
      seen = seen + Subspace::span_rows(v.transpose());
    }
    const R2Class cls = r2_embedding_class(actions[0], actions[1]);
    if (cls != R2Class::Phi6) {
      return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                          "R^2 action on the nilradical has class " + to_string(cls) +
                              ", not the split diagonal one"};
    }
    trace.push_back("diagonal R^2 action");
    return leaf_match("R3⋊{xyz=1}^0", std::move(fp), std::move(trace));
  }

  if (nc == NilpotentClass{NilpotentKind::Abelian, 4}) {
    trace.push_back("nilradical R^4");
    const JordanProfile& jp = *fp.action_profile;
    if (jp.block_count == 2) {
      trace.push_back("2 Jordan blocks");
      return leaf_match("R4⋊R[(x-1)^2,(x+1)^2]", std::move(fp), std::move(trace));
    }
    if (jp.block_count == 3) {
      trace.push_back("3 Jordan blocks");
      return leaf_match("R4⋊R[x^2,x-1,x+1]", std::move(fp), std::move(trace));
    }
    if (jp.block_count == 4) {
      trace.push_back("4 Jordan blocks");
      if (!jp.all_real) {
        return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                            "the action on the nilradical has complex eigenvalues"};
      }
      if (jp.distinct_real_count != 4) {
        return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                            "the action on the nilradical has repeated eigenvalues"};
      }
      IdentifyMatch match{"R4⋊R[diag]", {}, std::move(fp), std::move(trace)};
      if (match.certificate.normalized_action_poly) {
        std::vector<Rat> roots;
        for (const auto& [f, mult] : factor_rational(*match.certificate.normalized_action_poly)) {
          if (f.degree() == 1) {
            for (int k = 0; k < mult; ++k) roots.push_back(-f.coeff(0));
          }
        }
        if (roots.size() == 4) {
          std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return b < a; });
          match.params = {{"a", roots[0]}, {"b", roots[1]}, {"c", roots[2]}};
        }
      }
      return match;
    }
    return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                        "unexpected Jordan block count on the nilradical"};
  }

  if (nc == NilpotentClass{NilpotentKind::RplusN3, 4}) {
    trace.push_back("nilradical R+n3");
    if (fp.center_dim == 1) {
      trace.push_back("1-dim center");
      return leaf_match("Heis-Lorentz", std::move(fp), std::move(trace));
    }
    if (fp.center_dim == 2) {
      trace.push_back("2-dim center");
      return leaf_match("Sol41×E", std::move(fp), std::move(trace));
    }
    return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                        "center dimension " + std::to_string(fp.center_dim) +
                            " does not occur in the key"};
  }

  return NotInCatalog{NotInCatalogReason::UndecidedBranch, std::move(trace),
                      "nilradical class " + describe_class(nc) + " does not occur in the key"};
}

const std::vector<IsotropyRecord>& isotropy_poset() {
  static const std::vector<IsotropyRecord> poset = {
      {"SO(5)", "", {"SO(4)", "SO(3)×SO(2)", "SO(3)₅"}},
      {"SO(4)", "", {"U(2)", "SO(3)"}},
      {"SO(3)×SO(2)", "", {"SO(3)", "SO(2)×SO(2)"}},
      {"SO(3)₅", "", {"S¹_{1/2}"}},
      {"U(2)", "", {"SU(2)", "SO(2)×SO(2)"}},
      {"SU(2)", "", {"S¹_1"}},
      {"SO(3)", "", {"SO(2)"}},
      {"SO(2)×SO(2)", "", {"SO(2)", "S¹_1", "S¹_{m/n}", "S¹_{1/2}"}},
      {"SO(2)", "", {"{1}"}},
      {"S¹_1", "", {"{1}"}},
      {"S¹_{m/n}", "0 <= m/n <= 1", {"{1}"}},
      {"S¹_{1/2}", "", {"{1}"}},
      {"{1}", "", {}},
  };
  return poset;
}

const std::vector<SymmetricSpaceRecord>& symmetric_spaces() {
  static const std::vector<SymmetricSpaceRecord> spaces = {
      {"E^5"}, {"S^5"}, {"H^5"}, {"SL(3,R)/SO(3)"}, {"SU(3)/SO(3)"},
  };
  return spaces;
}

}  // namespace lie5
