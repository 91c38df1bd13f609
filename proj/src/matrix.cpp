#include "liemirror/matrix.hpp"

#include <sstream>

namespace liemirror {

namespace {

// One symmetric pivot step: makes s(k,k) a nonzero pivot if possible,
// updating the accumulated transform t by the same column operations.
// Returns false when the whole trailing block is zero.
bool prepare_pivot(MatQ& s, MatQ& t, int k) {
  int n = s.rows();
  if (!is_zero(s(k, k))) return true;
  for (int i = k + 1; i < n; ++i) {
    if (!is_zero(s(i, i))) {
      // Swap basis vectors k and i (congruence by a permutation).
      for (int j = 0; j < n; ++j) std::swap(s(k, j), s(i, j));
      for (int j = 0; j < n; ++j) std::swap(s(j, k), s(j, i));
      for (int j = 0; j < n; ++j) std::swap(t(j, k), t(j, i));
      return true;
    }
  }
  // All trailing diagonal entries vanish; fold an off-diagonal entry.
  for (int i = k; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(s(i, j))) {
        // Column op: v_i <- v_i + v_j turns 2*s(i,j) onto the diagonal.
        for (int c = 0; c < n; ++c) s(i, c) += s(j, c);
        for (int c = 0; c < n; ++c) s(c, i) += s(c, j);
        for (int c = 0; c < n; ++c) t(c, i) += t(c, j);
        if (i != k) {
          for (int c = 0; c < n; ++c) std::swap(s(k, c), s(i, c));
          for (int c = 0; c < n; ++c) std::swap(s(c, k), s(c, i));
          for (int c = 0; c < n; ++c) std::swap(t(c, k), t(c, i));
        }
        return true;
      }
  return false;
}

}  // namespace

MatQ congruence_diagonalize(const MatQ& sym) {
  int n = sym.rows();
  if (sym.cols() != n) throw DimensionMismatch("congruence_diagonalize: non-square");
  MatQ s = sym;
  MatQ t = MatQ::identity(n);
  for (int k = 0; k < n; ++k) {
    if (!prepare_pivot(s, t, k)) break;  // trailing block identically zero
    const Rat pivot = s(k, k);
    if (is_zero(pivot)) break;
    for (int j = k + 1; j < n; ++j) {
      if (is_zero(s(k, j))) continue;
      Rat f = s(k, j) / pivot;
      // v_j <- v_j - f v_k
      for (int c = 0; c < n; ++c) s(c, j) -= f * s(c, k);
      for (int c = 0; c < n; ++c) s(j, c) -= f * s(k, c);
      for (int c = 0; c < n; ++c) t(c, j) -= f * t(c, k);
    }
  }
  return t;
}

std::pair<int, int> signature(const MatQ& s) {
  int n = s.rows();
  if (s.cols() != n) throw DimensionMismatch("signature: non-square");
  if (s != s.transpose()) throw DimensionMismatch("signature: matrix not symmetric");
  if (is_zero(det(s))) throw DegenerateForm("signature: form is degenerate");
  MatQ t = congruence_diagonalize(s);
  MatQ d = t.transpose() * s * t;
  int p = 0, q = 0;
  for (int i = 0; i < n; ++i) {
    if (d(i, i) > 0)
      ++p;
    else if (d(i, i) < 0)
      ++q;
    else
      throw DegenerateForm("signature: zero diagonal after congruence");
  }
  return {p, q};
}

namespace {
template <typename K>
std::string matrix_to_string(const Matrix<K>& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << "[";
    for (int j = 0; j < m.cols(); ++j) {
      os << to_string(m(i, j));
      if (j + 1 < m.cols()) os << ",";
    }
    os << "]";
    if (i + 1 < m.rows()) os << ",";
  }
  os << "]";
  return os.str();
}
}  // namespace

std::string to_string(const MatQ& m) { return matrix_to_string(m); }
std::string to_string(const MatC& m) { return matrix_to_string(m); }

}  // namespace liemirror
