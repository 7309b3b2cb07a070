#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lie5/poly.hpp"
#include "lie5/rat.hpp"

/// Exact linear algebra over the rationals: canonical row reduction, kernels,
/// characteristic and minimal polynomials, and canonical subspace arithmetic.
namespace lie5 {

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError() : std::domain_error("matrix is singular") {}
};

class NotNilpotentError : public std::domain_error {
 public:
  NotNilpotentError() : std::domain_error("matrix is not nilpotent") {}
  explicit NotNilpotentError(const std::string& msg) : std::domain_error(msg) {}
};

template <class S>
struct RrefResult {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> mat;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

/// Reduced row echelon form with leading ones; deterministic (topmost nonzero
/// entry of the current column is the pivot), so the result is canonical.
template <class S>
RrefResult<S> rref(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m) {
  RrefResult<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != S(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const S lead = m(r, c);
    m.row(r) /= lead;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const S f = m(i, c);
      if (f != S(0)) m.row(i) -= f * m.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  out.rank = r;
  return out;
}

inline Index rank(const QMat& m) { return rref<Rat>(m).rank; }

/// Null space of m as matrix columns; the basis is the canonical one obtained
/// from the free variables of the reduced row echelon form, ordered by free
/// column index.
inline QMat kernel(const QMat& m) {
  const Index cols = m.cols();
  auto red = rref<Rat>(m);
  std::vector<Index> free_cols;
  {
    std::size_t p = 0;
    for (Index c = 0; c < cols; ++c) {
      if (p < red.pivot_cols.size() && red.pivot_cols[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  QMat k = QMat::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const Index fc = free_cols[j];
    k(fc, static_cast<Index>(j)) = Rat(1);
    for (Index r = 0; r < red.rank; ++r) k(red.pivot_cols[r], static_cast<Index>(j)) = -red.mat(r, fc);
  }
  return k;
}

/// Determinant by fraction-producing Gaussian elimination with row swaps.
inline Rat det(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
  const Index n = m.rows();
  Rat d(1);
  for (Index c = 0; c < n; ++c) {
    Index pivot = -1;
    for (Index i = c; i < n; ++i) {
      if (m(i, c) != Rat(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      d = -d;
    }
    d *= m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      const Rat f = m(i, c) / m(c, c);
      if (f != Rat(0)) m.row(i) -= f * m.row(c);
    }
  }
  return d;
}

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.  A need not be square.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto red = rref<Rat>(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == a.cols()) return std::nullopt;
  QVec x = QVec::Zero(a.cols());
  for (Index r = 0; r < red.rank; ++r) x(red.pivot_cols[r]) = red.mat(r, a.cols());
  return x;
}

inline QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const Index n = m.rows();
  QMat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = QMat::Identity(n, n);
  auto red = rref<Rat>(aug);
  if (red.rank < n || red.pivot_cols.back() >= n) throw SingularMatrixError();
  return red.mat.rightCols(n);
}

/// exp(m) for nilpotent m via the terminating series; throws NotNilpotentError
/// when m^n != 0.
inline QMat exp_nilpotent(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
  const Index n = m.rows();
  QMat sum = QMat::Identity(n, n);
  QMat power = QMat::Identity(n, n);
  Rat factorial(1);
  for (Index k = 1; k <= n; ++k) {
    power = (power * m).eval();
    if (power.isZero(Rat(0))) return sum;
    if (k == n) throw NotNilpotentError();
    factorial *= Rat(static_cast<long>(k));
    sum += power / factorial;
  }
  return sum;
}

/// Characteristic polynomial det(xI - m), computed by the Faddeev-LeVerrier
/// recurrence (exact, division only by small integers).
inline Poly char_poly(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix must be square");
  const Index n = m.rows();
  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
  coeffs[static_cast<std::size_t>(n)] = Rat(1);
  QMat mk = QMat::Zero(n, n);
  Rat ck(1);
  for (Index k = 1; k <= n; ++k) {
    mk = (m * (mk + ck * QMat::Identity(n, n))).eval();
    ck = -mk.trace() / Rat(static_cast<long>(k));
    coeffs[static_cast<std::size_t>(n - k)] = ck;
  }
  return Poly(std::move(coeffs));
}

/// p(m) by Horner evaluation.
inline QMat eval_poly(const Poly& p, const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eval_poly: matrix must be square");
  const Index n = m.rows();
  QMat acc = QMat::Zero(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = (acc * m).eval();
    acc += p.coeff(k) * QMat::Identity(n, n);
  }
  return acc;
}

/// Companion matrix of a monic polynomial: subdiagonal ones, last column the
/// negated coefficients; char_poly(companion(p)) == p.
inline QMat companion(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("companion: degree must be at least 1");
  if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
  const Index n = p.degree();
  QMat c = QMat::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) c(i + 1, i) = Rat(1);
  for (Index i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<int>(i));
  return c;
}

/// Row-major vectorization of a matrix, and its inverse.
inline QVec vec_row_major(const QMat& m) {
  QVec v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

inline QMat unvec_row_major(const QVec& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec_row_major: size mismatch");
  QMat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

/// Minimal polynomial: least common multiple of the annihilators of the Krylov
/// sequences of the standard basis vectors.
inline Poly min_poly(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("min_poly: matrix must be square");
  const Index n = m.rows();
  if (n == 0) return Poly::one();
  Poly result = Poly::one();
  for (Index i = 0; i < n; ++i) {
    std::vector<QVec> krylov;
    QVec v = QVec::Zero(n);
    v(i) = Rat(1);
    while (true) {
      QMat span(n, static_cast<Index>(krylov.size()));
      for (std::size_t j = 0; j < krylov.size(); ++j) span.col(static_cast<Index>(j)) = krylov[j];
      if (auto coords = solve(span, v)) {
        std::vector<Rat> ann(krylov.size() + 1, Rat(0));
        for (std::size_t j = 0; j < krylov.size(); ++j) ann[j] = -(*coords)(static_cast<Index>(j));
        ann.back() = Rat(1);
        result = lcm(result, Poly(std::move(ann)));
        break;
      }
      krylov.push_back(v);
      v = (m * v).eval();
    }
  }
  return result.monic();
}

/// A linear subspace of Q^n held by its canonical basis: the rows of the
/// reduced row echelon form of any spanning set.  Equal subspaces compare
/// equal componentwise.
class Subspace {
 public:
  static Subspace zero(Index ambient) { return Subspace(ambient, QMat::Zero(0, ambient)); }

  static Subspace full(Index ambient) {
    return Subspace(ambient, QMat::Identity(ambient, ambient));
  }

  /// Span of the rows of m.
  static Subspace span_rows(const QMat& m) {
    auto red = rref<Rat>(m);
    return Subspace(m.cols(), red.mat.topRows(red.rank));
  }

  /// Span of the columns of m.
  static Subspace span_cols(const QMat& m) { return span_rows(m.transpose()); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }

  /// Canonical basis, one vector per row.
  const QMat& basis() const { return basis_; }

  bool contains(const QVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    return reduce(v).isZero(Rat(0));
  }

  /// v reduced modulo the subspace (eliminating the pivot coordinates).
  QVec reduce(QVec v) const {
    for (Index r = 0; r < basis_.rows(); ++r) {
      Index p = 0;
      while (basis_(r, p) == Rat(0)) ++p;  // rows are nonzero with leading 1
      const Rat c = v(p);
      if (c != Rat(0)) v -= c * QVec(basis_.row(r).transpose());
    }
    return v;
  }

  bool contains(const Subspace& other) const {
    for (Index r = 0; r < other.basis_.rows(); ++r) {
      if (!contains(QVec(other.basis_.row(r).transpose()))) return false;
    }
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    QMat stacked(a.dim() + b.dim(), a.ambient_);
    stacked.topRows(a.dim()) = a.basis_;
    stacked.bottomRows(b.dim()) = b.basis_;
    return span_rows(stacked);
  }

  /// Intersection via the kernel of [A^T | -B^T].
  Subspace intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    const Index p = dim(), q = other.dim();
    if (p == 0 || q == 0) return zero(ambient_);
    QMat m(ambient_, p + q);
    m.leftCols(p) = basis_.transpose();
    m.rightCols(q) = -other.basis_.transpose();
    QMat k = kernel(m);
    QMat gens(k.cols(), ambient_);
    for (Index j = 0; j < k.cols(); ++j)
      gens.row(j) = (basis_.transpose() * k.col(j).head(p)).transpose();
    return span_rows(gens);
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
           basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  Subspace(Index ambient, QMat basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_;
  QMat basis_;  // canonical: reduced row echelon, full row rank
};

/// Matrix of m restricted to an m-invariant subspace, in the coordinates of
/// the subspace's canonical basis; throws when s is not invariant.
inline QMat restriction(const QMat& m, const Subspace& s) {
  if (m.rows() != m.cols() || m.rows() != s.ambient_dim())
    throw std::invalid_argument("restriction: dimension mismatch");
  const Index k = s.dim();
  QMat basis_t = s.basis().transpose();
  QMat out(k, k);
  for (Index i = 0; i < k; ++i) {
    QVec w = m * QVec(s.basis().row(i).transpose());
    auto coords = solve(basis_t, w);
    if (!coords) throw std::invalid_argument("restriction: subspace is not invariant");
    out.col(i) = *coords;
  }
  return out;
}

/// Incremental reduced-echelon basis builder; insert() reports whether the
/// vector enlarged the span.  Used for closure computations.
class RrefBasis {
 public:
  explicit RrefBasis(Index ambient) : ambient_(ambient) {}

  Index ambient_dim() const { return ambient_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  bool contains(QVec v) const {
    reduce_in_place(v);
    return v.isZero(Rat(0));
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(QVec v) {
    if (v.size() != ambient_) throw std::invalid_argument("RrefBasis::insert: dimension mismatch");
    reduce_in_place(v);
    Index lead = -1;
    for (Index j = 0; j < ambient_; ++j) {
      if (v(j) != Rat(0)) {
        lead = j;
        break;
      }
    }
    if (lead < 0) return false;
    const Rat pivot_val = v(lead);
    v /= pivot_val;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat f = rows_[r](lead);
      if (f != Rat(0)) rows_[r] -= f * v;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

  /// The current span with its canonical basis.
  QMat matrix() const {
    QMat m(rank(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.row(static_cast<Index>(r)) = rows_[r].transpose();
    return m;
  }

  Subspace subspace() const { return Subspace::span_rows(matrix()); }

 private:
  void reduce_in_place(QVec& v) const {
    // Rows are kept fully reduced against each other, so one elimination per
    // pivot suffices.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat c = v(pivots_[r]);
      if (c != Rat(0)) v -= c * rows_[r];
    }
  }

  Index ambient_;
  std::vector<QVec> rows_;
  std::vector<Index> pivots_;
};

}  // namespace lie5
