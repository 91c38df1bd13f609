#ifndef LIEMIRROR_STRUCTURES_HPP
#define LIEMIRROR_STRUCTURES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemirror/exterior.hpp"
#include "liemirror/lie_algebra.hpp"
#include "liemirror/semidirect.hpp"

namespace liemirror {

/// Endomorphism with J.J = -I; construction validates.
struct ComplexStructure {
  MatQ J;
  explicit ComplexStructure(MatQ j) : J(std::move(j)) {
    if (J.rows() != J.cols()) throw ValidationError("ComplexStructure: non-square matrix");
    if (J * J != -MatQ::identity(J.rows()))
      throw ValidationError("ComplexStructure: J*J != -I");
  }
};

/// Antisymmetric bilinear form; construction validates.
struct TwoForm {
  MatQ B;
  explicit TwoForm(MatQ b) : B(std::move(b)) {
    if (B.rows() != B.cols()) throw ValidationError("TwoForm: non-square matrix");
    if (B.transpose() != -B) throw ValidationError("TwoForm: matrix not antisymmetric");
  }
};

struct PseudoMetric {
  MatQ G;
  std::pair<int, int> sig;
};

/// N_J(x,y) = [x,y] - [Jx,Jy] + J([x,Jy] + [Jx,y]).
std::vector<Rat> nijenhuis(const LieQ& l, const MatQ& J, const std::vector<Rat>& x,
                           const std::vector<Rat>& y);

struct IntegrabilityResult {
  bool integrable = true;
  std::vector<std::pair<int, int>> violations;
};

/// Nijenhuis sweep over all basis pairs.
IntegrabilityResult is_integrable(const LieQ& l, const MatQ& J);

/// Reduction for totally real J on a semi-direct product: the vanishing of
/// [x,y] + J rho(x) J y - J rho(y) J x over base pairs.
IntegrabilityResult is_integrable(const SemidirectProduct& sd, const MatQ& J);

/// Closedness via d omega(x,y,z) = -(omega([x,y],z) + cyclic) on all triples.
bool is_closed(const LieQ& l, const MatQ& omega);

/// det(B) != 0, cross-checked against omega^m != 0. Throws OddDimension.
bool is_nondegenerate(const MatQ& omega);

/// Subspaces are basis matrices (columns).
bool is_lagrangian(const MatQ& omega, const MatQ& subspace);
bool is_totally_real(const MatQ& J, const MatQ& subspace);

/// g(x,y) = omega(x, Jy) with its signature; requires omega(J.,J.) = omega.
/// Throws Incompatible naming the violating pair, Degenerate when the
/// induced tensor is degenerate.
PseudoMetric compatibility_metric(const MatQ& omega, const MatQ& J);

bool is_compatible(const MatQ& omega, const MatQ& J);

/// closed + integrable + compatible + non-degenerate.
bool is_pseudo_kahler(const LieQ& l, const MatQ& J, const MatQ& omega);

/// Pseudo-Kahler + base and fiber totally real (J g = V) and Lagrangian.
bool is_special_lagrangian(const SemidirectProduct& sd, const MatQ& J, const MatQ& omega);

/// Restriction of a symmetric tensor on the total space to the base.
MatQ base_metric(const SemidirectProduct& sd, const MatQ& g_total);

struct VolumeFormReport {
  int n = 0;                 // base dimension
  bool applicable = false;   // the odd-n assertion applies
  CRat restriction;          // Phi evaluated on the fiber basis tuple
  bool re_zero = false;
  bool im_nonzero = false;
  std::string phi_text;
};

/// Builds u^j = q^j + i J q^j from a g-orthogonal base basis and evaluates
/// Phi = u^1 ^ ... ^ u^n on the fiber. Throws NonRationalOrthonormalization
/// when the base metric cannot be orthogonalized (degenerate).
VolumeFormReport volume_form_check(const SemidirectProduct& sd, const MatQ& J,
                                   const MatQ& g_on_base);

}  // namespace liemirror

#endif
