#include "liemirror/semidirect.hpp"

#include <algorithm>

namespace liemirror {

namespace {

std::vector<Rat> basis_vec(int n, int i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace

std::optional<std::pair<int, int>> Representation::violating_pair() const {
  int m = base.dim();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto br = base.bracket_basis(a, b);
      MatQ lhs(fiber_dim, fiber_dim);
      for (int k = 0; k < m; ++k)
        if (!is_zero(br[k])) lhs = lhs + rho[k].scaled(br[k]);
      MatQ rhs = rho[a] * rho[b] - rho[b] * rho[a];
      if (lhs != rhs) return std::make_pair(a, b);
    }
  return std::nullopt;
}

MatQ Representation::act(const std::vector<Rat>& x) const {
  MatQ m(fiber_dim, fiber_dim);
  for (size_t a = 0; a < rho.size(); ++a)
    if (!is_zero(x[a])) m = m + rho[a].scaled(x[a]);
  return m;
}

MatQ Connection::act(const std::vector<Rat>& x) const {
  int n = base.dim();
  MatQ m(n, n);
  for (size_t a = 0; a < gamma.size(); ++a)
    if (!is_zero(x[a])) m = m + gamma[a].scaled(x[a]);
  return m;
}

ConnectionCheck connection_check(const Connection& c) {
  ConnectionCheck out;
  int n = c.base.dim();
  for (int a = 0; a < n && (out.torsion_free || out.flat); ++a)
    for (int b = a + 1; b < n; ++b) {
      auto br = c.base.bracket_basis(a, b);
      // torsion: [x,y] - g(x)y + g(y)x
      std::vector<Rat> t = br;
      for (int i = 0; i < n; ++i) t[i] = t[i] - c.gamma[a](i, b) + c.gamma[b](i, a);
      for (int i = 0; i < n; ++i)
        if (!is_zero(t[i])) out.torsion_free = false;
      // curvature: g([x,y]) - g(x)g(y) + g(y)g(x)
      MatQ r(n, n);
      for (int k = 0; k < n; ++k)
        if (!is_zero(br[k])) r = r + c.gamma[k].scaled(br[k]);
      r = r - c.gamma[a] * c.gamma[b] + c.gamma[b] * c.gamma[a];
      if (!r.is_zero_matrix()) out.flat = false;
    }
  return out;
}

SemidirectProduct build_semidirect(const LieQ& g, const Representation& rho) {
  if (auto bad = rho.violating_pair())
    throw NotARepresentation("rho fails the homomorphism law on base pair (" +
                             std::to_string(bad->first + 1) + "," +
                             std::to_string(bad->second + 1) + ")");
  int m = g.dim(), f = rho.fiber_dim;
  int n = m + f;
  SemidirectProduct sd;
  sd.base = g;
  sd.rho = rho;
  if (m == f) {
    for (int a = 0; a < m; ++a) sd.base_pos.push_back(2 * a);
    for (int j = 0; j < f; ++j) sd.fiber_pos.push_back(2 * j + 1);
  } else {
    for (int a = 0; a < m; ++a) sd.base_pos.push_back(a);
    for (int j = 0; j < f; ++j) sd.fiber_pos.push_back(m + j);
  }
  BracketTable<Rat> b;
  auto put = [&](int p, int q, int r, const Rat& c) {
    if (is_zero(c)) return;
    if (p < q)
      b[{p, q}][r] += c;
    else
      b[{q, p}][r] -= c;
    if (is_zero(b[{std::min(p, q), std::max(p, q)}][r]))
      b[{std::min(p, q), std::max(p, q)}].erase(r);
  };
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c) {
      auto br = g.bracket_basis(a, c);
      for (int k = 0; k < m; ++k)
        if (!is_zero(br[k])) put(sd.base_pos[a], sd.base_pos[c], sd.base_pos[k], br[k]);
    }
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < f; ++j)
      for (int k = 0; k < f; ++k)
        put(sd.base_pos[a], sd.fiber_pos[j], sd.fiber_pos[k], rho.rho[a](k, j));
  std::vector<std::string> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = "e" + std::to_string(p + 1);
  sd.total = LieQ::create(n, std::move(b), std::move(labels));
  return sd;
}

SemidirectProduct wrap_semidirect(const LieQ& total, const std::vector<int>& base_pos,
                                  const std::vector<int>& fiber_pos) {
  int n = total.dim();
  int m = static_cast<int>(base_pos.size());
  int f = static_cast<int>(fiber_pos.size());
  if (m + f != n) throw ValidationError("wrap_semidirect: splitting does not cover the basis");
  std::vector<int> slot(n, -1);
  for (int a = 0; a < m; ++a) slot[base_pos[a]] = a;
  for (int j = 0; j < f; ++j) slot[fiber_pos[j]] = m + j;
  for (int p = 0; p < n; ++p)
    if (slot[p] < 0) throw ValidationError("wrap_semidirect: splitting misses a basis vector");

  auto fiber_component_zero = [&](const std::vector<Rat>& v) {
    for (int a = 0; a < m; ++a)
      if (!is_zero(v[base_pos[a]])) return false;
    return true;
  };
  // fiber is an abelian ideal, base a subalgebra
  for (int j = 0; j < f; ++j)
    for (int k = j + 1; k < f; ++k) {
      auto br = total.bracket_basis(fiber_pos[j], fiber_pos[k]);
      for (int p = 0; p < n; ++p)
        if (!is_zero(br[p])) throw ValidationError("wrap_semidirect: fiber is not abelian");
    }
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < f; ++j) {
      auto br = total.bracket_basis(p, fiber_pos[j]);
      if (!fiber_component_zero(br))
        throw ValidationError("wrap_semidirect: fiber is not an ideal");
    }
  BracketTable<Rat> gb;
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c) {
      auto br = total.bracket_basis(base_pos[a], base_pos[c]);
      for (int j = 0; j < f; ++j)
        if (!is_zero(br[fiber_pos[j]]))
          throw ValidationError("wrap_semidirect: base is not a subalgebra");
      for (int k = 0; k < m; ++k)
        if (!is_zero(br[base_pos[k]])) gb[{a, c}][k] = br[base_pos[k]];
    }
  SemidirectProduct sd;
  std::vector<std::string> blabels, flabels;
  for (int a = 0; a < m; ++a) blabels.push_back(total.label(base_pos[a]));
  sd.base = LieQ::create(m, std::move(gb), std::move(blabels));
  sd.rho.base = sd.base;
  sd.rho.fiber_dim = f;
  for (int a = 0; a < m; ++a) {
    MatQ r(f, f);
    for (int j = 0; j < f; ++j) {
      auto br = total.bracket_basis(base_pos[a], fiber_pos[j]);
      for (int k = 0; k < f; ++k) r(k, j) = br[fiber_pos[k]];
    }
    sd.rho.rho.push_back(std::move(r));
  }
  sd.total = total;
  sd.base_pos = base_pos;
  sd.fiber_pos = fiber_pos;
  return sd;
}

Representation dual_representation(const Representation& rho) {
  Representation d;
  d.base = rho.base;
  d.fiber_dim = rho.fiber_dim;
  for (const auto& m : rho.rho) d.rho.push_back(-m.transpose());
  return d;
}

Representation reorder_fiber(const Representation& rho, const std::vector<int>& perm) {
  // perm[new slot] = old slot
  Representation out;
  out.base = rho.base;
  out.fiber_dim = rho.fiber_dim;
  for (const auto& m : rho.rho) {
    MatQ r(rho.fiber_dim, rho.fiber_dim);
    for (int i = 0; i < rho.fiber_dim; ++i)
      for (int j = 0; j < rho.fiber_dim; ++j) r(i, j) = m(perm[i], perm[j]);
    out.rho.push_back(std::move(r));
  }
  return out;
}

DualProduct dual_semidirect(const SemidirectProduct& sd, bool reversed_fiber) {
  int f = sd.fiber_dim();
  DualProduct out;
  for (int j = 0; j < f; ++j) out.cov_of.push_back(reversed_fiber ? f - 1 - j : j);
  Representation dual = dual_representation(sd.rho);
  if (reversed_fiber) dual = reorder_fiber(dual, out.cov_of);
  out.product = build_semidirect(sd.base, dual);
  // Label dual fiber slots by the covector they carry.
  std::vector<std::string> labels(out.product.total.dim());
  for (int a = 0; a < sd.base_dim(); ++a)
    labels[out.product.base_pos[a]] = sd.total.label(sd.base_pos[a]);
  for (int j = 0; j < f; ++j)
    labels[out.product.fiber_pos[j]] =
        "e^" + sd.total.label(sd.fiber_pos[out.cov_of[j]]).substr(1);
  out.product.total = out.product.total.with_labels(labels);
  return out;
}

MatQ double_dual_identification(const SemidirectProduct& sd, const DualProduct& dual,
                                const DualProduct& ddual) {
  int n = sd.total.dim();
  MatQ phi(n, n);
  for (int a = 0; a < sd.base_dim(); ++a)
    phi(ddual.product.base_pos[a], sd.base_pos[a]) = 1;
  for (int t = 0; t < sd.fiber_dim(); ++t) {
    int original = dual.cov_of[ddual.cov_of[t]];
    phi(ddual.product.fiber_pos[t], sd.fiber_pos[original]) = 1;
  }
  return phi;
}

bool is_totally_real_for(const SemidirectProduct& sd, const MatQ& J) {
  int n = sd.total.dim();
  for (int a : sd.base_pos)
    for (int p : sd.base_pos)
      if (!is_zero(J(p, a))) return false;
  for (int j : sd.fiber_pos)
    for (int p : sd.fiber_pos)
      if (!is_zero(J(p, j))) return false;
  // J^2 = -1 plus the block pattern gives J(base) = fiber exactly.
  MatQ sq = J * J;
  return sq == -MatQ::identity(n);
}

MatQ omega_from_j(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J) {
  if (!is_totally_real_for(sd, J))
    throw NotTotallyReal("omega_from_j: J is not totally real for the splitting");
  int n = sd.total.dim();
  MatQ b(n, n);
  for (int a = 0; a < sd.base_dim(); ++a)
    for (int j = 0; j < sd.fiber_dim(); ++j) {
      // omega(x + u, y + v) = v(Jx) - u(Jy); slot j holds (f_{cov j})*.
      Rat val = J(sd.fiber_pos[dual.cov_of[j]], sd.base_pos[a]);
      int p = dual.product.base_pos[a];
      int q = dual.product.fiber_pos[j];
      b(p, q) = val;
      b(q, p) = -val;
    }
  return b;
}

namespace {

bool lagrangian_blocks(const SemidirectProduct& sd, const MatQ& omega) {
  for (int a : sd.base_pos)
    for (int c : sd.base_pos)
      if (!is_zero(omega(a, c))) return false;
  for (int j : sd.fiber_pos)
    for (int k : sd.fiber_pos)
      if (!is_zero(omega(j, k))) return false;
  return true;
}

}  // namespace

MatQ j_from_omega(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& omega) {
  if (!lagrangian_blocks(sd, omega))
    throw NotLagrangian("j_from_omega: base and fiber must both be Lagrangian");
  int n = sd.total.dim();
  int m = sd.base_dim();
  // mixed block M(a, j) = omega(b_a, f_j) must be invertible
  MatQ mixed(m, m);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) mixed(a, j) = omega(sd.base_pos[a], sd.fiber_pos[j]);
  auto mixed_inv = inverse(mixed);
  if (!mixed_inv) throw Degenerate("j_from_omega: omega is degenerate");
  MatQ J(n, n);
  // J(base_a) = (i_{b_a} omega)|_V placed on the dual fiber slots.
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) {
      int slot = -1;
      for (int s = 0; s < m; ++s)
        if (dual.cov_of[s] == j) slot = s;
      J(dual.product.fiber_pos[slot], dual.product.base_pos[a]) = mixed(a, j);
    }
  // J(covector of f_j) = -omega^{-1}(f_j^*): the z in the base with
  // omega(z, f_k) = delta_{jk}, i.e. rows of mixed^{-1}.
  for (int s = 0; s < m; ++s) {
    int j = dual.cov_of[s];
    for (int a = 0; a < m; ++a)
      J(dual.product.base_pos[a], dual.product.fiber_pos[s]) = -(*mixed_inv)(j, a);
  }
  return J;
}

Connection connection_from_complex(const SemidirectProduct& sd, const MatQ& J) {
  if (!is_totally_real_for(sd, J))
    throw NotTotallyReal("connection_from_complex: J is not totally real");
  int m = sd.base_dim();
  // J blocks: A(j, a) = coefficient of f_j in J(b_a); C(a, j) likewise back.
  MatQ A(m, m), C(m, m);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) {
      A(j, a) = J(sd.fiber_pos[j], sd.base_pos[a]);
      C(a, j) = J(sd.base_pos[a], sd.fiber_pos[j]);
    }
  Connection c;
  c.base = sd.base;
  for (int a = 0; a < m; ++a) c.gamma.push_back(-(C * sd.rho.rho[a] * A));
  return c;
}

TotallyRealProduct complex_from_connection(const Connection& gamma) {
  auto chk = connection_check(gamma);
  if (!chk.flat || !chk.torsion_free)
    throw NotFlatOrTorsionFree("complex_from_connection: connection must be flat and torsion-free");
  Representation rho;
  rho.base = gamma.base;
  rho.fiber_dim = gamma.base.dim();
  rho.rho = gamma.gamma;
  TotallyRealProduct out{build_semidirect(gamma.base, rho), MatQ()};
  int n = out.product.total.dim();
  MatQ J(n, n);
  for (int a = 0; a < gamma.base.dim(); ++a) {
    J(out.product.fiber_pos[a], out.product.base_pos[a]) = 1;
    J(out.product.base_pos[a], out.product.fiber_pos[a]) = -1;
  }
  out.J = J;
  return out;
}

LagrangianProduct symplectic_from_connection(const Connection& gamma) {
  auto chk = connection_check(gamma);
  if (!chk.flat || !chk.torsion_free)
    throw NotFlatOrTorsionFree(
        "symplectic_from_connection: connection must be flat and torsion-free");
  Representation asrep;
  asrep.base = gamma.base;
  asrep.fiber_dim = gamma.base.dim();
  asrep.rho = gamma.gamma;
  Representation dual = dual_representation(asrep);
  LagrangianProduct out;
  out.product = build_semidirect(gamma.base, dual);
  int m = gamma.base.dim();
  for (int j = 0; j < m; ++j) out.cov_of.push_back(j);
  int n = out.product.total.dim();
  MatQ b(n, n);
  // omega(x + u, y + v) = u(y) - v(x) on g + g*.
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) {
      Rat val = (a == j) ? Rat(-1) : Rat(0);
      b(out.product.base_pos[a], out.product.fiber_pos[j]) = val;
      b(out.product.fiber_pos[j], out.product.base_pos[a]) = -val;
    }
  out.omega = b;
  return out;
}

Connection connection_from_symplectic(const SemidirectProduct& sd, const MatQ& omega) {
  if (!lagrangian_blocks(sd, omega))
    throw NotLagrangian("connection_from_symplectic: splitting must be Lagrangian");
  int m = sd.base_dim();
  MatQ mixed(m, m);  // mixed(a, j) = omega(b_a, f_j)
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) mixed(a, j) = omega(sd.base_pos[a], sd.fiber_pos[j]);
  auto mixed_inv = inverse(mixed);
  if (!mixed_inv) throw Degenerate("connection_from_symplectic: omega is degenerate");
  // closedness of omega
  {
    int n = sd.total.dim();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          Rat s(0);
          auto term = [&](int p, int q, int r) {
            auto br = sd.total.bracket_basis(p, q);
            for (int k = 0; k < n; ++k)
              if (!is_zero(br[k])) s += br[k] * omega(k, r);
          };
          term(x, y, z);
          term(y, z, x);
          term(z, x, y);
          if (!is_zero(s)) throw NotClosed("connection_from_symplectic: omega is not closed");
        }
  }
  Connection c;
  c.base = sd.base;
  auto dual = dual_representation(sd.rho);
  for (int a = 0; a < m; ++a) {
    MatQ g(m, m);
    for (int y = 0; y < m; ++y) {
      // omega(b_y) restricted to V, in covector coordinates.
      std::vector<Rat> u(m);
      for (int j = 0; j < m; ++j) u[j] = mixed(y, j);
      auto ru = dual.rho[a].apply(u);
      // z in the base with omega(z, f_j) = ru[j]: z = mixed^{-t}-solve.
      auto z = solve(mixed.transpose(), ru);
      if (!z) throw Degenerate("connection_from_symplectic: omega is degenerate");
      for (int i = 0; i < m; ++i) g(i, y) = (*z)[i];
    }
    c.gamma.push_back(std::move(g));
  }
  return c;
}

Connection dual_connection(const Connection& gamma, const MatQ& g_metric) {
  auto ginv = inverse(g_metric);
  if (!ginv) throw DegenerateForm("dual_connection: metric is degenerate");
  Connection out;
  out.base = gamma.base;
  for (const auto& m : gamma.gamma) out.gamma.push_back(-((*ginv) * m.transpose() * g_metric));
  return out;
}

}  // namespace liemirror
