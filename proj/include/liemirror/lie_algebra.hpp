#ifndef LIEMIRROR_LIE_ALGEBRA_HPP
#define LIEMIRROR_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liemirror/errors.hpp"
#include "liemirror/exterior.hpp"
#include "liemirror/matrix.hpp"

namespace liemirror {

/// Sparse structure-constant table: (i,j) with i<j maps to the coordinates
/// of [e_i, e_j]; antisymmetry is implied.
template <typename K>
using BracketTable = std::map<std::pair<int, int>, std::map<int, K>>;

template <typename K>
struct JacobiViolation {
  int i, j, k;
  std::vector<K> cyclic_sum;
};

/// Lie algebra given by structure constants over an exact field.
/// The validating factory refuses tensors that fail the Jacobi identity.
template <typename K>
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}

  static LieAlgebra create(int dim, BracketTable<K> brackets,
                           std::vector<std::string> labels = {});
  static LieAlgebra create_unchecked(int dim, BracketTable<K> brackets,
                                     std::vector<std::string> labels = {});

  static LieAlgebra abelian(int dim, std::vector<std::string> labels = {}) {
    return create_unchecked(dim, {}, std::move(labels));
  }

  int dim() const { return dim_; }
  const BracketTable<K>& brackets() const { return brackets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  /// [e_i, e_j] as a coordinate vector (any i, j).
  std::vector<K> bracket_basis(int i, int j) const {
    std::vector<K> v(dim_, field<K>::zero());
    if (i == j) return v;
    int sign = 1, a = i, b = j;
    if (a > b) {
      std::swap(a, b);
      sign = -1;
    }
    auto it = brackets_.find({a, b});
    if (it == brackets_.end()) return v;
    for (const auto& [k, c] : it->second) v[k] = sign > 0 ? c : -c;
    return v;
  }

  /// Bilinear extension of the bracket to coordinate vectors.
  std::vector<K> bracket(const std::vector<K>& x, const std::vector<K>& y) const {
    std::vector<K> out(dim_, field<K>::zero());
    for (const auto& [ij, comps] : brackets_) {
      K coef = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
      if (is_zero(coef)) continue;
      for (const auto& [k, c] : comps) out[k] += coef * c;
    }
    return out;
  }

  /// Matrix of ad(x): y -> [x, y].
  Matrix<K> ad(const std::vector<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      std::vector<K> ej(dim_, field<K>::zero());
      ej[j] = field<K>::one();
      auto col = bracket(x, ej);
      for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  LieAlgebra<K> with_labels(std::vector<std::string> labels) const {
    LieAlgebra<K> l = *this;
    l.labels_ = std::move(labels);
    return l;
  }

  bool same_structure(const LieAlgebra& o) const {
    return dim_ == o.dim_ && brackets_ == o.brackets_;
  }

 private:
  LieAlgebra(int dim, BracketTable<K> brackets, std::vector<std::string> labels)
      : dim_(dim), brackets_(std::move(brackets)), labels_(std::move(labels)) {
    if (labels_.empty())
      for (int i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
    for (auto it = brackets_.begin(); it != brackets_.end();) {
      auto& [ij, comps] = *it;
      if (ij.first >= ij.second || ij.first < 0 || ij.second >= dim_)
        throw ValidationError("LieAlgebra: bad bracket key");
      for (auto ct = comps.begin(); ct != comps.end();)
        ct = is_zero(ct->second) ? comps.erase(ct) : std::next(ct);
      it = comps.empty() ? brackets_.erase(it) : std::next(it);
    }
  }

  int dim_;
  BracketTable<K> brackets_;
  std::vector<std::string> labels_;
};

using LieQ = LieAlgebra<Rat>;
using LieC = LieAlgebra<CRat>;

/// All Jacobi violations over basis triples i<j<k; empty iff the tensor is
/// a Lie bracket.
template <typename K>
std::vector<JacobiViolation<K>> check_jacobi(const LieAlgebra<K>& l) {
  std::vector<JacobiViolation<K>> out;
  int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<K> ei(n, field<K>::zero()), ej(n, field<K>::zero()),
            ek(n, field<K>::zero());
        ei[i] = ej[j] = ek[k] = field<K>::one();
        auto s1 = l.bracket(ei, l.bracket(ej, ek));
        auto s2 = l.bracket(ej, l.bracket(ek, ei));
        auto s3 = l.bracket(ek, l.bracket(ei, ej));
        std::vector<K> sum(n, field<K>::zero());
        bool nonzero = false;
        for (int t = 0; t < n; ++t) {
          sum[t] = s1[t] + s2[t] + s3[t];
          nonzero = nonzero || !is_zero(sum[t]);
        }
        if (nonzero) out.push_back({i, j, k, std::move(sum)});
      }
  return out;
}

template <typename K>
LieAlgebra<K> LieAlgebra<K>::create(int dim, BracketTable<K> brackets,
                                    std::vector<std::string> labels) {
  LieAlgebra<K> l(dim, std::move(brackets), std::move(labels));
  auto violations = check_jacobi(l);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw JacobiFailure("Jacobi identity fails on basis triple (" +
                        std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                        std::to_string(v.k + 1) + ")");
  }
  return l;
}

template <typename K>
LieAlgebra<K> LieAlgebra<K>::create_unchecked(int dim, BracketTable<K> brackets,
                                              std::vector<std::string> labels) {
  return LieAlgebra<K>(dim, std::move(brackets), std::move(labels));
}

inline LieC complexify(const LieQ& l) {
  BracketTable<CRat> b;
  for (const auto& [ij, comps] : l.brackets())
    for (const auto& [k, c] : comps) b[ij][k] = CRat(c);
  return LieC::create_unchecked(l.dim(), std::move(b), l.labels());
}

/// Chevalley-Eilenberg differential of the dual basis covector e^k:
/// de^k = -sum_{i<j} c^k_{ij} e^i ^ e^j.
template <typename K>
ExtElement<K> ce_differential_covector(const LieAlgebra<K>& l, int k) {
  ExtElement<K> d(l.dim(), 2);
  for (const auto& [ij, comps] : l.brackets()) {
    auto it = comps.find(k);
    if (it == comps.end()) continue;
    d.add_term((1u << ij.first) | (1u << ij.second), -it->second);
  }
  return d;
}

/// CE differential on forms, extended from covectors as an antiderivation.
/// Degree dim input is rejected (the target degree does not exist).
template <typename K>
ExtElement<K> ce_differential(const LieAlgebra<K>& l, const ExtElement<K>& a) {
  if (a.ambient_dim() != l.dim())
    throw DimensionMismatch("ce_differential: ambient dimension mismatch");
  if (a.degree() >= l.dim())
    throw DegreeOverflow("ce_differential: degree must be < dim");
  ExtElement<K> out(l.dim(), a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    int pos = 0;
    for (int t = 0; t < l.dim(); ++t) {
      if (!(mask & (1u << t))) continue;
      ExtElement<K> rest(l.dim(), a.degree() - 1);
      rest.add_term(mask & ~(1u << t), (pos % 2 == 0) ? c : -c);
      out = out + wedge(ce_differential_covector(l, t), rest);
      ++pos;
    }
  }
  return out;
}

/// Masks of degree-k multi-indices in increasing order, plus inverse lookup.
std::vector<uint32_t> degree_masks(int n, int k);

/// Matrix of the CE differential Lambda^k -> Lambda^{k+1} in the mask bases.
template <typename K>
Matrix<K> ce_matrix(const LieAlgebra<K>& l, int k) {
  int n = l.dim();
  auto dom = degree_masks(n, k);
  auto cod = degree_masks(n, k + 1);
  std::map<uint32_t, int> cod_index;
  for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  Matrix<K> m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    ExtElement<K> b(n, k);
    b.add_term(dom[j], field<K>::one());
    if (k >= n) continue;
    ExtElement<K> db = ce_differential(l, b);
    for (const auto& [mask, c] : db.terms()) m(cod_index[mask], static_cast<int>(j)) = c;
  }
  return m;
}

struct SeriesProfile {
  std::vector<int> lcs_dims;  // g, [g,g], [g,[g,g]], ... until stable
  std::vector<int> ds_dims;   // g, [g,g], [[g,g],[g,g]], ...
  int center_dim = 0;
  int derived_dim = 0;
  bool nilpotent() const { return lcs_dims.empty() || lcs_dims.back() == 0; }
  bool operator==(const SeriesProfile&) const = default;
};

SeriesProfile series_profile(const LieQ& l);

/// Necessary isomorphism invariants: series data, rank of the bracket map
/// Lambda^2 g -> g, and dim{x : [x,g] in center}.
struct Fingerprint {
  SeriesProfile series;
  int bracket_rank = 0;
  int centralizer_of_center_dim = 0;
  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const LieQ& l);

/// Structure transported along an invertible map w: [x,y]' = w[w^-1 x, w^-1 y].
LieQ transport(const LieQ& l, const MatQ& w);

std::string structure_equations(const LieQ& l);

}  // namespace liemirror

#endif
