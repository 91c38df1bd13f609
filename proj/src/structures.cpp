#include "liemirror/structures.hpp"

#include <sstream>

namespace liemirror {

std::vector<Rat> nijenhuis(const LieQ& l, const MatQ& J, const std::vector<Rat>& x,
                           const std::vector<Rat>& y) {
  auto jx = J.apply(x), jy = J.apply(y);
  auto t1 = l.bracket(x, y);
  auto t2 = l.bracket(jx, jy);
  auto t3 = J.apply(l.bracket(x, jy));
  auto t4 = J.apply(l.bracket(jx, y));
  std::vector<Rat> out(l.dim());
  for (int i = 0; i < l.dim(); ++i) out[i] = t1[i] - t2[i] + t3[i] + t4[i];
  return out;
}

namespace {
std::vector<Rat> unit(int n, int i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}
bool all_zero(const std::vector<Rat>& v) {
  for (const auto& c : v)
    if (!is_zero(c)) return false;
  return true;
}
}  // namespace

IntegrabilityResult is_integrable(const LieQ& l, const MatQ& J) {
  IntegrabilityResult res;
  int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!all_zero(nijenhuis(l, J, unit(n, i), unit(n, j)))) {
        res.integrable = false;
        res.violations.emplace_back(i, j);
      }
  return res;
}

IntegrabilityResult is_integrable(const SemidirectProduct& sd, const MatQ& J) {
  if (!is_totally_real_for(sd, J))
    throw NotTotallyReal("is_integrable: J is not totally real for the splitting");
  IntegrabilityResult res;
  int n = sd.total.dim();
  for (int a = 0; a < sd.base_dim(); ++a)
    for (int b = a + 1; b < sd.base_dim(); ++b) {
      auto x = unit(n, sd.base_pos[a]);
      auto y = unit(n, sd.base_pos[b]);
      // [x,y] + J rho(x) J y - J rho(y) J x, all inside the total algebra
      auto t1 = sd.total.bracket(x, y);
      auto t2 = J.apply(sd.total.bracket(x, J.apply(y)));
      auto t3 = J.apply(sd.total.bracket(y, J.apply(x)));
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (!is_zero(t1[i] + t2[i] - t3[i])) ok = false;
      if (!ok) {
        res.integrable = false;
        res.violations.emplace_back(sd.base_pos[a], sd.base_pos[b]);
      }
    }
  return res;
}

bool is_closed(const LieQ& l, const MatQ& omega) {
  int n = l.dim();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        Rat s(0);
        auto term = [&](int p, int q, int r) {
          auto br = l.bracket_basis(p, q);
          for (int k = 0; k < n; ++k)
            if (!is_zero(br[k])) s += br[k] * omega(k, r);
        };
        term(x, y, z);
        term(y, z, x);
        term(z, x, y);
        if (!is_zero(s)) return false;
      }
  return true;
}

bool is_nondegenerate(const MatQ& omega) {
  int n = omega.rows();
  if (n % 2 != 0) throw OddDimension("is_nondegenerate: dimension must be even");
  bool by_det = !is_zero(det(omega));
  // Cross-check with omega^m != 0 in the exterior algebra.
  ExtQ w(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(omega(i, j))) w.add_term((1u << i) | (1u << j), omega(i, j));
  bool by_wedge = !wedge_power(w, n / 2).is_zero();
  if (by_det != by_wedge)
    throw Error("is_nondegenerate: determinant and top-power routes disagree");
  return by_det;
}

bool is_lagrangian(const MatQ& omega, const MatQ& subspace) {
  if (2 * subspace.cols() != omega.rows())
    throw DimensionMismatch("is_lagrangian: subspace must be half-dimensional");
  MatQ r = subspace.transpose() * omega * subspace;
  return r.is_zero_matrix();
}

bool is_totally_real(const MatQ& J, const MatQ& subspace) {
  int n = J.rows();
  MatQ js = J * subspace;
  MatQ joint(n, subspace.cols() * 2);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < subspace.cols(); ++c) {
      joint(i, c) = subspace(i, c);
      joint(i, subspace.cols() + c) = js(i, c);
    }
  return rank(joint) == n;
}

bool is_compatible(const MatQ& omega, const MatQ& J) {
  return J.transpose() * omega * J == omega;
}

PseudoMetric compatibility_metric(const MatQ& omega, const MatQ& J) {
  int n = omega.rows();
  if (!is_compatible(omega, J)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<Rat> ei = unit(n, i), ej = unit(n, j);
        auto ji = J.apply(ei), jj = J.apply(ej);
        Rat lhs(0), rhs(0);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            lhs += ji[p] * omega(p, q) * jj[q];
            rhs += ei[p] * omega(p, q) * ej[q];
          }
        if (lhs != rhs)
          throw Incompatible("omega(J.,J.) != omega on basis pair (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")");
      }
  }
  PseudoMetric m;
  m.G = omega * J;
  if (m.G != m.G.transpose())
    throw Incompatible("induced tensor omega(.,J.) is not symmetric");
  if (is_zero(det(m.G))) throw Degenerate("compatibility metric is degenerate");
  m.sig = signature(m.G);
  return m;
}

bool is_pseudo_kahler(const LieQ& l, const MatQ& J, const MatQ& omega) {
  if (!is_nondegenerate(omega)) return false;
  if (!is_closed(l, omega)) return false;
  if (!is_integrable(l, J).integrable) return false;
  return is_compatible(omega, J);
}

namespace {
MatQ positions_matrix(int n, const std::vector<int>& pos) {
  MatQ m(n, static_cast<int>(pos.size()));
  for (size_t c = 0; c < pos.size(); ++c) m(pos[c], static_cast<int>(c)) = 1;
  return m;
}
}  // namespace

bool is_special_lagrangian(const SemidirectProduct& sd, const MatQ& J, const MatQ& omega) {
  if (!is_pseudo_kahler(sd.total, J, omega)) return false;
  if (!is_totally_real_for(sd, J)) return false;
  int n = sd.total.dim();
  MatQ base = positions_matrix(n, sd.base_pos);
  MatQ fiber = positions_matrix(n, sd.fiber_pos);
  return is_lagrangian(omega, base) && is_lagrangian(omega, fiber) &&
         is_totally_real(J, base) && is_totally_real(J, fiber);
}

MatQ base_metric(const SemidirectProduct& sd, const MatQ& g_total) {
  int m = sd.base_dim();
  MatQ g(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g(a, b) = g_total(sd.base_pos[a], sd.base_pos[b]);
  return g;
}

VolumeFormReport volume_form_check(const SemidirectProduct& sd, const MatQ& J,
                                   const MatQ& g_on_base) {
  if (!is_totally_real_for(sd, J))
    throw NotTotallyReal("volume_form_check: J is not totally real");
  int m = sd.base_dim();
  int n = sd.total.dim();
  if (is_zero(det(g_on_base)))
    throw NonRationalOrthonormalization("volume_form_check: base metric is degenerate");
  // Rational orthogonal (not orthonormal) basis; the restriction claims are
  // scale invariant.
  MatQ t = congruence_diagonalize(g_on_base);
  // q_a = sum_i t(i, a) b_i as vectors of the total space.
  std::vector<std::vector<Rat>> q(m, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i) q[a][sd.base_pos[i]] = t(i, a);
  // Full basis {q_a} + {J q_a}; u^a = q^a + i J q^a with q^a the dual
  // covectors. Dual basis: invert the change of basis.
  MatQ p(n, n);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) {
      p(i, a) = q[a][i];
      p(i, m + a) = 0;
    }
  for (int a = 0; a < m; ++a) {
    auto jq = J.apply(q[a]);
    for (int i = 0; i < n; ++i) p(i, m + a) = jq[i];
  }
  auto pinv = inverse(p);
  if (!pinv) throw NonRationalOrthonormalization("volume_form_check: base not independent");
  // Row a of p^{-1} is the covector q^a; row m+a is (Jq_a)^*.
  MatC covJ = complexify(-J.transpose());
  VolumeFormReport rep;
  rep.n = m;
  rep.applicable = (m % 2 == 1);
  ExtC phi = ExtC::scalar(n, CRat(1));
  for (int a = 0; a < m; ++a) {
    ExtC u(n, 1);
    std::vector<CRat> qa(n), jqa(n);
    for (int i = 0; i < n; ++i) qa[i] = CRat((*pinv)(a, i));
    jqa = covJ.apply(qa);
    for (int i = 0; i < n; ++i) {
      CRat c = qa[i] + CRat::i() * jqa[i];
      if (!is_zero(c)) u.add_term(1u << i, c);
    }
    phi = wedge(phi, u);
  }
  rep.phi_text = to_string(phi);
  // Restrict to the fiber: evaluate on the fiber basis tuple.
  std::vector<std::vector<CRat>> fiber_vectors;
  for (int j = 0; j < sd.fiber_dim(); ++j) {
    std::vector<CRat> v(n, CRat(0));
    v[sd.fiber_pos[j]] = CRat(1);
    fiber_vectors.push_back(std::move(v));
  }
  rep.restriction = evaluate(phi, fiber_vectors);
  rep.re_zero = rep.restriction.re.is_zero();
  rep.im_nonzero = !rep.restriction.im.is_zero();
  return rep;
}

}  // namespace liemirror
