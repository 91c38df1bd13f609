#ifndef LIEMIRROR_CATALOG_HPP
#define LIEMIRROR_CATALOG_HPP

#include <string>
#include <vector>

#include "liemirror/semidirect.hpp"
#include "liemirror/structures.hpp"

namespace liemirror {

enum class BaseKind { abelian, heisenberg };
std::string to_string(BaseKind k);

/// A named six-dimensional nilpotent algebra generated from its
/// representation matrices on the ordered fiber basis {e2, e4, e6}.
struct CatalogEntry {
  std::string name;
  BaseKind base_kind;
  SemidirectProduct sd;
};

/// The twelve semi-direct entries (five abelian-base, seven
/// Heisenberg-base) plus the abelian h1.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name, BaseKind kind);

/// Three-dimensional Heisenberg algebra with [e1, e3] = -e5 on the ordered
/// basis used as the non-abelian base.
LieQ heisenberg3();

/// Member of the bracket family (0,0,0,a12,b13,c14+d23) carrying the fixed
/// J (e_{2j-1} -> e_{2j}) and omega = e16 - e25 + e34.
struct FamilyPoint {
  Rat a, b, c, d;
  SemidirectProduct sd;
  MatQ J;
  MatQ omega;
};
FamilyPoint family_point(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
/// The constrained member with c = a + 2b, d = -(a + b); closed and
/// integrable by construction.
FamilyPoint family_member(const Rat& a, const Rat& b);

/// A semi-direct product together with a designated pseudo-Kahler pair.
struct NamedStructure {
  std::string name;
  SemidirectProduct sd;
  MatQ J;
  MatQ omega;
};

/// J(base_a) = fiber_a on an equal-rank splitting.
MatQ standard_j(const SemidirectProduct& sd);

/// R^n ltimes R^n with rho(e_i) = diag(0,..,rho_i,..,0).
SemidirectProduct rn_ltimes_rn(const std::vector<Rat>& rho_diag);
/// omega_a = sum a_i e^i ^ v^i on that product.
MatQ diagonal_omega(const SemidirectProduct& sd, const std::vector<Rat>& a);

NamedStructure abelian_structure(int half_dim);   // h1 and toy cases
NamedStructure h8_structure();                    // explicit pair on h8
NamedStructure fourdim_structure();               // [e1,e2] = -e3, dim 4
NamedStructure solvable_example();                // Kahler, solvable base

/// Antisymmetric Gram matrix of a degree-2 form and back.
MatQ form_to_matrix(const ExtQ& w);
ExtQ matrix_to_form(const MatQ& b);

/// The checked dual-table claims: (name, base kind) -> dual name.
struct DualTableClaim {
  std::string name;
  BaseKind base_kind;
  std::string dual_name;
};
const std::vector<DualTableClaim>& dual_table_claims();

/// The mirror-theorem rows: algebra -> mirror algebra, with a designated
/// special Lagrangian structure for each.
struct MirrorClaim {
  std::string name;
  std::string mirror_name;
  bool self_mirror;
};
const std::vector<MirrorClaim>& mirror_claims();

/// The designated special Lagrangian structure used for a mirror-theorem
/// row (family members for h4/h7/h9/h10/h11, explicit pairs for h1/h8).
NamedStructure mirror_row_structure(const std::string& name);

}  // namespace liemirror

#endif
