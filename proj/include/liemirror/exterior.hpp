#ifndef LIEMIRROR_EXTERIOR_HPP
#define LIEMIRROR_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liemirror/errors.hpp"
#include "liemirror/matrix.hpp"
#include "liemirror/scalar.hpp"

namespace liemirror {

/// Homogeneous element of the exterior algebra on a based space of dimension
/// ambient_dim. Terms are keyed by index bitmasks (bit i = basis index i,
/// 0-based); zero coefficients are pruned on insertion.
template <typename K>
class ExtElement {
 public:
  ExtElement() : ambient_(0), degree_(0) {}
  ExtElement(int ambient_dim, int degree) : ambient_(ambient_dim), degree_(degree) {
    if (degree < 0 || degree > ambient_dim)
      throw DegreeOverflow("ExtElement: degree out of range");
  }

  static ExtElement basis(int ambient_dim, const std::vector<int>& indices) {
    ExtElement e(ambient_dim, static_cast<int>(indices.size()));
    uint32_t mask = 0;
    for (int i : indices) {
      if (i < 0 || i >= ambient_dim) throw DegreeOverflow("ExtElement: index out of range");
      if (mask & (1u << i)) return e;  // repeated index -> zero
      mask |= 1u << i;
    }
    // Sign of sorting the given sequence.
    int sign = 1;
    std::vector<int> v = indices;
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b)
        if (v[a] > v[b]) {
          std::swap(v[a], v[b]);
          sign = -sign;
        }
    e.add_term(mask, sign > 0 ? field<K>::one() : -field<K>::one());
    return e;
  }

  static ExtElement scalar(int ambient_dim, const K& c) {
    ExtElement e(ambient_dim, 0);
    e.add_term(0, c);
    return e;
  }

  int ambient_dim() const { return ambient_; }
  int degree() const { return degree_; }
  const std::map<uint32_t, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(uint32_t mask, const K& c) {
    if (liemirror::is_zero(c)) return;
    if (std::popcount(mask) != degree_)
      throw DegreeOverflow("ExtElement: term degree mismatch");
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, c);
    } else {
      it->second += c;
      if (liemirror::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coefficient(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? field<K>::zero() : it->second;
  }

  ExtElement operator+(const ExtElement& o) const {
    check_compatible(o);
    ExtElement s = *this;
    for (const auto& [m, c] : o.terms_) s.add_term(m, c);
    return s;
  }
  ExtElement operator-(const ExtElement& o) const {
    check_compatible(o);
    ExtElement s = *this;
    for (const auto& [m, c] : o.terms_) s.add_term(m, -c);
    return s;
  }
  ExtElement operator-() const {
    ExtElement s(ambient_, degree_);
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
  }
  ExtElement scaled(const K& c) const {
    ExtElement s(ambient_, degree_);
    if (liemirror::is_zero(c)) return s;
    for (const auto& [m, v] : terms_) s.add_term(m, v * c);
    return s;
  }
  bool operator==(const ExtElement& o) const {
    return ambient_ == o.ambient_ && degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const ExtElement& o) const { return !(*this == o); }

 private:
  void check_compatible(const ExtElement& o) const {
    if (ambient_ != o.ambient_ || degree_ != o.degree_)
      throw DimensionMismatch("ExtElement: incompatible operands");
  }

  int ambient_;
  int degree_;
  std::map<uint32_t, K> terms_;
};

/// Sign produced by moving mask b past mask a into sorted position
/// (a, b disjoint): parity of #{(i,j) : i in a, j in b, i > j}.
inline int shuffle_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  while (b) {
    uint32_t j = b & (b ^ (b - 1));  // lowest bit of b
    uint32_t above = a & ~(j | (j - 1));
    swaps += std::popcount(above);
    b &= b - 1;
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

template <typename K>
ExtElement<K> wedge(const ExtElement<K>& a, const ExtElement<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("wedge: ambient dimension mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.ambient_dim()) return ExtElement<K>(a.ambient_dim(), 0);  // zero (as 0-form)
  ExtElement<K> w(a.ambient_dim(), deg);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int s = shuffle_sign(ma, mb);
      K c = ca * cb;
      w.add_term(ma | mb, s > 0 ? c : -c);
    }
  return w;
}

/// Interior product with the coordinate vector x.
template <typename K>
ExtElement<K> contract(const std::vector<K>& x, const ExtElement<K>& a) {
  if (static_cast<int>(x.size()) != a.ambient_dim())
    throw DimensionMismatch("contract: vector size mismatch");
  if (a.degree() < 1) throw DegreeOverflow("contract: degree must be >= 1");
  ExtElement<K> out(a.ambient_dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (int i = 0; i < a.ambient_dim(); ++i) {
      if (!(m & (1u << i))) continue;
      if (!is_zero(x[i])) {
        K v = x[i] * c;
        out.add_term(m & ~(1u << i), (pos % 2 == 0) ? v : -v);
      }
      ++pos;
    }
  }
  return out;
}

/// Full antisymmetric multilinear evaluation; arity must equal the degree.
template <typename K>
K evaluate(const ExtElement<K>& a, const std::vector<std::vector<K>>& vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw ArityMismatch("evaluate: number of vectors must equal degree");
  ExtElement<K> cur = a;
  for (const auto& v : vectors) {
    if (cur.degree() == 0) break;
    cur = contract(v, cur);
  }
  return cur.coefficient(0);
}

/// k-fold wedge power.
template <typename K>
ExtElement<K> wedge_power(const ExtElement<K>& a, int k) {
  ExtElement<K> acc = ExtElement<K>::scalar(a.ambient_dim(), field<K>::one());
  for (int i = 0; i < k; ++i) acc = wedge(acc, a);
  return acc;
}

using ExtQ = ExtElement<Rat>;
using ExtC = ExtElement<CRat>;

template <typename K>
ExtElement<K> complexify_ext_into(const ExtQ& a) {
  ExtElement<K> out(a.ambient_dim(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add_term(m, K(c));
  return out;
}
inline ExtC complexify(const ExtQ& a) { return complexify_ext_into<CRat>(a); }

/// Parses the e-notation "e16-e25+e34", "2e12-1/2e34", "e135", "0".
/// Indices are single digits 1..9 referring to 1-based basis labels.
ExtQ parse_form(const std::string& text, int ambient_dim);

std::string to_string(const ExtQ& a);
std::string to_string(const ExtC& a);

}  // namespace liemirror

#endif
