#ifndef LIEMIRROR_SEMIDIRECT_HPP
#define LIEMIRROR_SEMIDIRECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "liemirror/lie_algebra.hpp"

namespace liemirror {

/// Linear action rho: g -> End(V), one fiber matrix per base basis vector.
/// valid() checks the homomorphism law rho([x,y]) = [rho(x), rho(y)].
struct Representation {
  LieQ base;
  int fiber_dim = 0;
  std::vector<MatQ> rho;

  std::optional<std::pair<int, int>> violating_pair() const;
  bool valid() const { return !violating_pair().has_value(); }
  /// rho(x) for a coordinate vector x on the base.
  MatQ act(const std::vector<Rat>& x) const;
};

/// gamma: g -> End(g); no law assumed, flatness/torsion are predicates.
struct Connection {
  LieQ base;
  std::vector<MatQ> gamma;
  MatQ act(const std::vector<Rat>& x) const;
};

struct ConnectionCheck {
  bool torsion_free = true;
  bool flat = true;
};

/// T(x,y) = [x,y] - g(x)y + g(y)x and R(x,y) = g([x,y]) - [g(x), g(y)],
/// swept over base pairs.
ConnectionCheck connection_check(const Connection& c);

/// g ltimes_rho V with bookkeeping for the base/fiber positions inside the
/// total basis. When dim g = dim V the basis interleaves (g at odd labels,
/// V at even) matching the catalog layout; otherwise base comes first.
struct SemidirectProduct {
  LieQ total;
  LieQ base;
  Representation rho;
  std::vector<int> base_pos;
  std::vector<int> fiber_pos;

  int base_dim() const { return static_cast<int>(base_pos.size()); }
  int fiber_dim() const { return static_cast<int>(fiber_pos.size()); }
};

/// Builds the product; throws NotARepresentation when rho breaks the
/// homomorphism law.
SemidirectProduct build_semidirect(const LieQ& g, const Representation& rho);

/// Wraps an existing algebra with a distinguished splitting; validates that
/// the fiber is an abelian ideal and the base a subalgebra.
SemidirectProduct wrap_semidirect(const LieQ& total, const std::vector<int>& base_pos,
                                  const std::vector<int>& fiber_pos);

/// Dual representation rho*(x) = -rho(x)^t acting on V*.
Representation dual_representation(const Representation& rho);

/// Conjugates fiber slots by a permutation (e.g. the reversed covector
/// ordering used for the printed dual representations).
Representation reorder_fiber(const Representation& rho, const std::vector<int>& perm);

/// Dual semi-direct product g ltimes_{rho*} V*. Fiber slot j of the dual
/// carries the covector of original fiber slot cov_of[j].
struct DualProduct {
  SemidirectProduct product;
  std::vector<int> cov_of;
};

DualProduct dual_semidirect(const SemidirectProduct& sd, bool reversed_fiber = false);

/// Canonical identification (V*)* = V as a change of basis from sd.total to
/// the double dual's total space.
MatQ double_dual_identification(const SemidirectProduct& sd, const DualProduct& dual,
                                const DualProduct& ddual);

/// Totally real check for an endomorphism matrix on sd.total:
/// J(base) = fiber and J(fiber) = base.
bool is_totally_real_for(const SemidirectProduct& sd, const MatQ& J);

/// omega_J on the dual product: omega(x+u, y+v) = v(Jx) - u(Jy).
/// Throws NotTotallyReal.
MatQ omega_from_j(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J);

/// J_omega on the dual product, from a form on sd with both factors
/// Lagrangian: base -> (i_x omega)|_V, covector u -> -omega^{-1}(u).
/// Throws NotLagrangian / Degenerate.
MatQ j_from_omega(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& omega);

/// gamma(x) = -J rho(x) J on the base. Throws NotTotallyReal.
Connection connection_from_complex(const SemidirectProduct& sd, const MatQ& J);

/// h = g ltimes_gamma g with J(x,y) = (-y,x). Throws NotFlatOrTorsionFree.
struct TotallyRealProduct {
  SemidirectProduct product;
  MatQ J;
};
TotallyRealProduct complex_from_connection(const Connection& gamma);

/// h-dual = g ltimes_{gamma*} g* with the standard pairing
/// omega(x+u, y+v) = u(y) - v(x). Throws NotFlatOrTorsionFree.
struct LagrangianProduct {
  SemidirectProduct product;
  MatQ omega;
  std::vector<int> cov_of;  // fiber slot -> base index whose covector it is
};
LagrangianProduct symplectic_from_connection(const Connection& gamma);

/// gamma(x)y = omega^{-1}(rho*(x) omega(y)). Throws NotLagrangian / NotClosed.
Connection connection_from_symplectic(const SemidirectProduct& sd, const MatQ& omega);

/// -gamma^t with the transpose taken with respect to g.
Connection dual_connection(const Connection& gamma, const MatQ& g_metric);

}  // namespace liemirror

#endif
