#include "liemirror/lie_algebra.hpp"

#include <sstream>

namespace liemirror {

std::vector<uint32_t> degree_masks(int n, int k) {
  std::vector<uint32_t> out;
  if (k < 0 || k > n) return out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

namespace {

// Span of a set of coordinate vectors as a matrix with independent columns.
MatQ column_span(const std::vector<std::vector<Rat>>& vecs, int dim) {
  if (vecs.empty()) return MatQ(dim, 0);
  MatQ m(dim, static_cast<int>(vecs.size()));
  for (size_t j = 0; j < vecs.size(); ++j)
    for (int i = 0; i < dim; ++i) m(i, static_cast<int>(j)) = vecs[j][i];
  // Reduce to independent columns via echelon pivots of the transpose.
  Echelon<Rat> e = bareiss_echelon(m.transpose());
  MatQ out(dim, e.rank());
  int c = 0;
  for (int r = 0; r < e.rank(); ++r) {
    for (int i = 0; i < dim; ++i) out(i, c) = e.mat(r, i);
    ++c;
  }
  return out;
}

// [A, B] = span{[a, b] : a in cols(A), b in cols(B)}.
MatQ bracket_span(const LieQ& l, const MatQ& a, const MatQ& b) {
  std::vector<std::vector<Rat>> vecs;
  for (int p = 0; p < a.cols(); ++p)
    for (int q = 0; q < b.cols(); ++q) {
      std::vector<Rat> x(l.dim()), y(l.dim());
      for (int i = 0; i < l.dim(); ++i) {
        x[i] = a(i, p);
        y[i] = b(i, q);
      }
      auto z = l.bracket(x, y);
      bool nz = false;
      for (auto& v : z) nz = nz || !is_zero(v);
      if (nz) vecs.push_back(std::move(z));
    }
  return column_span(vecs, l.dim());
}

MatQ full_space(int n) { return MatQ::identity(n); }

// Basis of the center {x : [x, e_i] = 0 for all i}.
std::vector<std::vector<Rat>> center_basis(const LieQ& l) {
  int n = l.dim();
  MatQ sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> ei(n, Rat(0));
    ei[i] = 1;
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> ej(n, Rat(0));
      ej[j] = 1;
      auto br = l.bracket(ej, ei);
      for (int k = 0; k < n; ++k) sys(i * n + k, j) = br[k];
    }
  }
  return kernel_basis(sys);
}

}  // namespace

SeriesProfile series_profile(const LieQ& l) {
  SeriesProfile p;
  int n = l.dim();
  MatQ g = full_space(n);

  MatQ cur = g;
  p.lcs_dims.push_back(cur.cols());
  for (;;) {
    MatQ next = bracket_span(l, g, cur);
    if (next.cols() == cur.cols()) {
      // stabilized without reaching zero
      if (next.cols() != 0 && p.lcs_dims.back() != next.cols())
        p.lcs_dims.push_back(next.cols());
      break;
    }
    p.lcs_dims.push_back(next.cols());
    cur = next;
    if (cur.cols() == 0) break;
  }

  cur = g;
  p.ds_dims.push_back(cur.cols());
  for (;;) {
    MatQ next = bracket_span(l, cur, cur);
    if (next.cols() == cur.cols()) break;
    p.ds_dims.push_back(next.cols());
    cur = next;
    if (cur.cols() == 0) break;
  }

  p.center_dim = static_cast<int>(center_basis(l).size());
  p.derived_dim = bracket_span(l, g, g).cols();
  return p;
}

Fingerprint fingerprint(const LieQ& l) {
  Fingerprint f;
  f.series = series_profile(l);
  int n = l.dim();

  // Rank of the bracket map Lambda^2 g -> g.
  auto pairs = degree_masks(n, 2);
  MatQ bm(n, static_cast<int>(pairs.size()));
  for (size_t c = 0; c < pairs.size(); ++c) {
    int i = std::countr_zero(pairs[c]);
    int j = std::countr_zero(pairs[c] & (pairs[c] - 1));
    auto br = l.bracket_basis(i, j);
    for (int k = 0; k < n; ++k) bm(k, static_cast<int>(c)) = br[k];
  }
  f.bracket_rank = rank(bm);

  // {x : [x, g] <= center}: impose q([x, e_i]) = 0 for all functionals q
  // annihilating the center.
  auto zb = center_basis(l);
  MatQ z(n, static_cast<int>(zb.size()));
  for (size_t j = 0; j < zb.size(); ++j)
    for (int i = 0; i < n; ++i) z(i, static_cast<int>(j)) = zb[j][i];
  auto ann = kernel_basis(z.transpose());  // rows annihilating the center
  MatQ sys(static_cast<int>(ann.size()) * n, n);
  for (size_t a = 0; a < ann.size(); ++a)
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> ei(n, Rat(0));
      ei[i] = 1;
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        auto br = l.bracket(ej, ei);
        Rat v(0);
        for (int k = 0; k < n; ++k) v += ann[a][k] * br[k];
        sys(static_cast<int>(a) * n + i, j) = v;
      }
    }
  f.centralizer_of_center_dim = static_cast<int>(kernel_basis(sys).size());
  return f;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "lcs(";
  for (size_t i = 0; i < series.lcs_dims.size(); ++i)
    os << (i ? "," : "") << series.lcs_dims[i];
  os << ") ds(";
  for (size_t i = 0; i < series.ds_dims.size(); ++i)
    os << (i ? "," : "") << series.ds_dims[i];
  os << ") z=" << series.center_dim << " der=" << series.derived_dim
     << " brk=" << bracket_rank << " cz=" << centralizer_of_center_dim;
  return os.str();
}

LieQ transport(const LieQ& l, const MatQ& w) {
  int n = l.dim();
  auto winv = inverse(w);
  if (!winv) throw ValidationError("transport: map is not invertible");
  BracketTable<Rat> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rat> x(n), y(n);
      for (int r = 0; r < n; ++r) {
        x[r] = (*winv)(r, i);
        y[r] = (*winv)(r, j);
      }
      auto br = w.apply(l.bracket(x, y));
      for (int k = 0; k < n; ++k)
        if (!is_zero(br[k])) b[{i, j}][k] = br[k];
    }
  return LieQ::create_unchecked(n, std::move(b), l.labels());
}

std::string structure_equations(const LieQ& l) {
  std::ostringstream os;
  bool any = false;
  for (const auto& [ij, comps] : l.brackets()) {
    std::ostringstream rhs;
    bool lead = true;
    for (const auto& [k, c] : comps) {
      std::string coeff;
      if (c == 1)
        coeff = lead ? "" : "+";
      else if (c == -1)
        coeff = "-";
      else {
        coeff = to_string(c);
        if (!lead && coeff[0] != '-') coeff = "+" + coeff;
      }
      rhs << coeff << l.label(k);
      lead = false;
    }
    if (any) os << ", ";
    os << "[" << l.label(ij.first) << "," << l.label(ij.second) << "]=" << rhs.str();
    any = true;
  }
  return any ? os.str() : "abelian";
}

}  // namespace liemirror
