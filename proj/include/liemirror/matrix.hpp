#ifndef LIEMIRROR_MATRIX_HPP
#define LIEMIRROR_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liemirror/errors.hpp"
#include "liemirror/scalar.hpp"

namespace liemirror {

/// Dense matrix over an exact field (Rat or CRat). Immutable in spirit:
/// operations return new values.
template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, field<K>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field<K>::one();
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<K>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Matrix multiply: shape mismatch");
    Matrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (is_zero(o(k, j))) continue;
          p(i, j) += a * o(k, j);
        }
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("Matrix add: shape mismatch");
    Matrix s = *this;
    for (size_t t = 0; t < data_.size(); ++t) s.data_[t] += o.data_[t];
    return s;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("Matrix sub: shape mismatch");
    Matrix s = *this;
    for (size_t t = 0; t < data_.size(); ++t) s.data_[t] -= o.data_[t];
    return s;
  }

  Matrix operator-() const {
    Matrix s = *this;
    for (auto& v : s.data_) v = -v;
    return s;
  }

  Matrix scaled(const K& c) const {
    Matrix s = *this;
    for (auto& v : s.data_) v = v * c;
    return s;
  }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw DimensionMismatch("Matrix apply: shape mismatch");
    std::vector<K> y(rows_, field<K>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  int rows_, cols_;
  std::vector<K> data_;
};

using MatQ = Matrix<Rat>;
using MatC = Matrix<CRat>;

/// Fraction-free (Bareiss) echelon reduction. Returns the echelon form
/// together with the pivot column list; `rank` is the pivot count.
template <typename K>
struct Echelon {
  Matrix<K> mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <typename K>
Echelon<K> bareiss_echelon(Matrix<K> m) {
  Echelon<K> out{m, {}};
  Matrix<K>& a = out.mat;
  int r = 0;
  K prev = field<K>::one();
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.swap_rows(piv, r);
    const K pivot = a(r, c);
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(i, j) * pivot - a(i, c) * a(r, j)) / prev;
      a(i, c) = field<K>::zero();
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

template <typename K>
int rank(const Matrix<K>& m) {
  return bareiss_echelon(m).rank();
}

/// Exact basis of the right kernel; size = cols - rank, each v satisfies mv = 0.
template <typename K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  Echelon<K> e = bareiss_echelon(m);
  const Matrix<K>& a = e.mat;
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<K> v(n, field<K>::zero());
    v[fc] = field<K>::one();
    // Back-substitute through the echelon rows.
    for (int r = e.rank() - 1; r >= 0; --r) {
      int pc = e.pivot_cols[r];
      if (pc > fc) continue;
      K s = field<K>::zero();
      for (int j = pc + 1; j < n; ++j)
        if (!is_zero(v[j]) && !is_zero(a(r, j))) s += a(r, j) * v[j];
      v[pc] = -s / a(r, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; returns nullopt when inconsistent. For underdetermined
/// systems returns one solution (free variables set to zero).
template <typename K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionMismatch("solve: rhs size mismatch");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<K> e = bareiss_echelon(aug);
  for (int c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  int n = m.cols();
  std::vector<K> x(n, field<K>::zero());
  for (int r = e.rank() - 1; r >= 0; --r) {
    int pc = e.pivot_cols[r];
    K s = e.mat(r, n);
    for (int j = pc + 1; j < n; ++j)
      if (!is_zero(x[j]) && !is_zero(e.mat(r, j))) s -= e.mat(r, j) * x[j];
    x[pc] = s / e.mat(r, pc);
  }
  return x;
}

template <typename K>
K det(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det: non-square matrix");
  int n = m.rows();
  if (n == 0) return field<K>::one();
  Matrix<K> a = m;
  K prev = field<K>::one();
  K sign = field<K>::one();
  for (int r = 0; r < n - 1; ++r) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!is_zero(a(i, r))) {
        piv = i;
        break;
      }
    if (piv < 0) return field<K>::zero();
    if (piv != r) {
      a.swap_rows(piv, r);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / prev;
      a(i, r) = field<K>::zero();
    }
    prev = a(r, r);
  }
  return sign * a(n - 1, n - 1);
}

template <typename K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: non-square matrix");
  int n = m.rows();
  Matrix<K> inv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<K> e(n, field<K>::zero());
    e[c] = field<K>::one();
    auto x = solve(m, e);
    if (!x) return std::nullopt;
    for (int i = 0; i < n; ++i) inv(i, c) = (*x)[i];
  }
  if (rank(m) != n) return std::nullopt;
  return inv;
}

/// Inertia (p, q) of a non-degenerate symmetric rational matrix, computed by
/// exact congruence diagonalization: pick the first nonzero diagonal pivot;
/// when the remaining diagonal is all zero, fold an off-diagonal entry onto
/// the diagonal first. Throws DegenerateForm when det = 0.
std::pair<int, int> signature(const MatQ& s);

/// Congruence transform T with T^t S T diagonal (S symmetric, any rank).
/// Used for signatures and for rational orthogonalization of metrics.
MatQ congruence_diagonalize(const MatQ& s);

template <typename K>
Matrix<K> complexify_into(const Matrix<Rat>& m) {
  Matrix<K> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = K(m(i, j));
  return out;
}

inline MatC complexify(const MatQ& m) { return complexify_into<CRat>(m); }

std::string to_string(const MatQ& m);
std::string to_string(const MatC& m);

}  // namespace liemirror

#endif
