#include "lie5/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie5 {

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  Index out = 1;
  for (Index i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::vector<std::vector<Index>> lex_subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Index> cur(static_cast<std::size_t>(k));
  // Odometer over ascending index tuples.
  for (Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    Index pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (Index i = pos + 1; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

Index CochainComplex::cochain_dim(Index p) const {
  return binomial(algebra.dim(), p) * rep.module_dim();
}

QMat CochainComplex::boundary(Index p) const {
  if (p >= 0 && p < static_cast<Index>(boundaries.size()))
    return boundaries[static_cast<std::size_t>(p)];
  return QMat::Zero(cochain_dim(p + 1), cochain_dim(p));
}

namespace {

Index subset_position(const std::vector<std::vector<Index>>& subsets,
                      const std::vector<Index>& s) {
  const auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  return static_cast<Index>(it - subsets.begin());
}

}  // namespace

CochainComplex ce_complex(const LieAlgebra& g, const Representation& rep) {
  if (rep.algebra() != g)
    throw std::invalid_argument("representation is over a different algebra");
  const Index n = g.dim();
  const Index m = rep.module_dim();
  CochainComplex out{g, rep, {}};
  for (Index p = 0; p < n; ++p) {
    const auto rows_sets = lex_subsets(n, p + 1);
    const auto cols_sets = lex_subsets(n, p);
    QMat d = QMat::Zero(static_cast<Index>(rows_sets.size()) * m,
                        static_cast<Index>(cols_sets.size()) * m);
    for (std::size_t ti = 0; ti < rows_sets.size(); ++ti) {
      const std::vector<Index>& t = rows_sets[ti];
      // Bracket sum: positions a < b, sign (-1)^{a+b} with 1-based positions
      // (equivalently 0-based: the parities agree).
      for (Index a = 0; a < p + 1; ++a) {
        for (Index b = a + 1; b < p + 1; ++b) {
          const QVec br = g.bracket(t[static_cast<std::size_t>(a)],
                                    t[static_cast<std::size_t>(b)]);
          std::vector<Index> rest;
          for (Index q = 0; q < p + 1; ++q)
            if (q != a && q != b) rest.push_back(t[static_cast<std::size_t>(q)]);
          const int sign_ab = ((a + b) % 2 == 0) ? 1 : -1;
          for (Index k = 0; k < n; ++k) {
            if (br(k) == Rat(0)) continue;
            if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
            std::vector<Index> s = rest;
            const auto ins = std::lower_bound(s.begin(), s.end(), k);
            const int before = static_cast<int>(ins - s.begin());
            s.insert(ins, k);
            const int sign_k = (before % 2 == 0) ? 1 : -1;
            const Index col_block = subset_position(cols_sets, s);
            const Rat coeff = br(k) * Rat(sign_ab * sign_k);
            for (Index mm = 0; mm < m; ++mm)
              d(static_cast<Index>(ti) * m + mm, col_block * m + mm) += coeff;
          }
        }
      }
      // Action sum: position a, sign (-1)^{a+1} 1-based = (-1)^a 0-based.
      for (Index a = 0; a < p + 1; ++a) {
        std::vector<Index> s;
        for (Index q = 0; q < p + 1; ++q)
          if (q != a) s.push_back(t[static_cast<std::size_t>(q)]);
        const int sign_a = (a % 2 == 0) ? 1 : -1;
        const QMat& act = rep.matrix(t[static_cast<std::size_t>(a)]);
        const Index col_block = subset_position(cols_sets, s);
        for (Index r = 0; r < m; ++r)
          for (Index cc = 0; cc < m; ++cc)
            d(static_cast<Index>(ti) * m + r, col_block * m + cc) += Rat(sign_a) * act(r, cc);
      }
    }
    out.boundaries.push_back(std::move(d));
  }
  return out;
}

Index cohomology_dim(const LieAlgebra& g, const Representation& rep, Index p) {
  if (p < 0 || p > g.dim()) throw std::out_of_range("degree must lie in [0, dim g]");
  const CochainComplex cx = ce_complex(g, rep);
  const Index ker = cx.cochain_dim(p) - rank(cx.boundary(p));
  const Index im = (p == 0) ? 0 : rank(cx.boundary(p - 1));
  return ker - im;
}

bool is_cocycle(const Cocycle2& c) {
  const LieAlgebra& g = c.rep.algebra();
  const Index n = g.dim();
  const Index m = c.rep.module_dim();
  for (const auto& [key, value] : c.value_on_pairs) {
    if (key.first < 0 || key.first >= key.second || key.second >= n)
      throw std::invalid_argument("cocycle pair keys must satisfy 0 <= i < j < dim");
    if (value.size() != m) throw std::invalid_argument("cocycle value has wrong module size");
  }
  const CochainComplex cx = ce_complex(g, c.rep);
  const auto pairs = lex_subsets(n, 2);
  QVec vec = QVec::Zero(cx.cochain_dim(2));
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto it = c.value_on_pairs.find({pairs[s][0], pairs[s][1]});
    if (it == c.value_on_pairs.end()) continue;
    for (Index mm = 0; mm < m; ++mm) vec(static_cast<Index>(s) * m + mm) = it->second(mm);
  }
  return QVec(cx.boundary(2) * vec).isZero();
}

LieAlgebra extension_from_cocycle(const Representation& rep, const Cocycle2& c) {
  if (c.rep != rep)
    throw std::invalid_argument("cocycle is attached to a different representation");
  if (!is_abelian(rep.algebra()))
    throw UnsupportedShapeError("extension requires an abelian base");
  if (!is_cocycle(c)) throw NotACocycleError();

  const Index m = rep.module_dim();
  const Index k = rep.algebra().dim();
  const LieAlgebra split = semidirect_sum(LieAlgebra::abelian(m), rep.matrices());
  BracketMap brackets = split.structure_constants();
  for (const auto& [key, value] : c.value_on_pairs) {
    if (value.isZero()) continue;
    // [z_j, z_i] with j > i carries -c(e_i, e_j) in the module component.
    QVec w = QVec::Zero(m + k);
    w.head(m) = -value;
    brackets[{m + key.second, m + key.first}] = w;
  }
  return LieAlgebra::make(m + k, split.basis_names(), brackets);
}

}  // namespace lie5
