#ifndef LIEMIRROR_DGA_HPP
#define LIEMIRROR_DGA_HPP

#include <string>
#include <vector>

#include "liemirror/exterior.hpp"
#include "liemirror/lie_algebra.hpp"
#include "liemirror/semidirect.hpp"

namespace liemirror {

/// Degree-one element x + alpha of the complexified h + h*.
struct MixedElement {
  std::vector<CRat> vec;
  std::vector<CRat> cov;

  static MixedElement zero(int n) {
    return {std::vector<CRat>(n, CRat(0)), std::vector<CRat>(n, CRat(0))};
  }
  int dim() const { return static_cast<int>(vec.size()); }
  MixedElement operator+(const MixedElement& o) const;
  MixedElement operator-(const MixedElement& o) const;
  MixedElement scaled(const CRat& c) const;
  bool is_zero() const;
  bool operator==(const MixedElement& o) const { return vec == o.vec && cov == o.cov; }
};

MixedElement conj(const MixedElement& a);

/// Natural pairing <x+alpha, y+beta> = alpha(y) + beta(x).
CRat natural_pairing(const MixedElement& a, const MixedElement& b);

/// [x+alpha . y+beta] = [x,y] + i_x d beta - i_y d alpha.
MixedElement schouten_bracket(const LieC& l, const MixedElement& a, const MixedElement& b);

/// Action of J on h + h*: x -> Jx, alpha -> -J^t alpha.
MixedElement apply_j(const MatC& J, const MixedElement& a);

/// (1 - iJ) a.
MixedElement one_minus_ij(const MatC& J, const MixedElement& a);

enum class DGAKind { complex_structure, symplectic };

/// Exterior algebra on gen_dim degree-one generators with a degree-one Lie
/// bracket table and a square-zero antiderivation.
struct DGAlgebra {
  DGAKind kind = DGAKind::symplectic;
  int gen_dim = 0;
  BracketTable<CRat> bracket;
  std::vector<ExtC> d1_images;       // differential of each generator (degree 2)
  std::vector<MatC> diff;            // diff[k]: Lambda^k -> Lambda^{k+1}
  std::vector<std::string> gen_labels;

  std::vector<CRat> bracket_gen(int i, int j) const;  // table, any order
  /// Degree-one bracket of coordinate vectors.
  std::vector<CRat> bracket_deg1(const std::vector<CRat>& x,
                                 const std::vector<CRat>& y) const;
};

/// Gerstenhaber extension of the degree-one bracket by graded Leibniz with
/// the Koszul convention [a . b^c] = [a.b]^c + (-1)^{(|a|-1)|b|} b^[a.c].
ExtC gerstenhaber_bracket(const DGAlgebra& dga, const ExtC& a, const ExtC& b);

/// Degree-one space f^1 = h^(1,0) + h^*(0,1) with its chosen basis.
struct DegreeOneSpace {
  LieC ambient;                     // complexified h
  MatC J;
  std::vector<MixedElement> basis;  // generators of f^1
};

struct ComplexDGA {
  DGAlgebra dga;
  DegreeOneSpace f1;
};

/// DGA of an integrable complex structure. The generator basis is
/// (1-iJ)(base vectors) + (1-iJ)(fiber covectors) for the semi-direct
/// overload, and a greedily chosen independent set otherwise.
/// Throws NotIntegrable when f^1 is not closed under the Schouten bracket.
ComplexDGA build_complex_dga(const LieQ& l, const MatQ& J);
ComplexDGA build_complex_dga(const SemidirectProduct& sd, const MatQ& J);

/// DGA of a symplectic form: bracket [a.b] = omega[omega^-1 a . omega^-1 b]
/// on k*, differential = CE differential of k. Throws NotSymplectic.
DGAlgebra build_symplectic_dga(const LieQ& k, const MatQ& omega);

/// Degree-one morphism between DGAs, columns = images of the source
/// generators in target generator coordinates.
struct DGAMorphism {
  MatC degree_one_map;
};

/// The tautological map phi(x + v*) = (1-iJ)x + (1-iJ)v* from the dual
/// product to f^1, verified to be a Lie algebra isomorphism onto the
/// Schouten bracket. Throws BracketMismatch.
DGAMorphism phi_map(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J,
                    const ComplexDGA& target);

/// Constant lambda with <conj(phi a), phi b> = lambda * omega_J(a, b) over
/// all basis pairs. Throws NotProportional.
CRat pairing_check(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J);

struct DGAIsoResult {
  bool ok = false;
  CRat bracket_constant;
  std::string failure;
};

/// Checks that m intertwines the differentials exactly in every degree and
/// the brackets up to one global constant.
DGAIsoResult verify_dga_isomorphism(const DGAlgebra& target, const DGAlgebra& source,
                                    const DGAMorphism& m);

/// phi composed with the omega_J contraction: the degree-one map
/// (h-dual)* -> f^1 of the mirror theorem.
DGAMorphism mirror_morphism(const SemidirectProduct& sd, const DualProduct& dual,
                            const MatQ& J, const ComplexDGA& target);

std::vector<int> betti_numbers(const DGAlgebra& dga);

/// Exterior power of a linear map in the mask bases.
MatC exterior_power(const MatC& m, int k);

}  // namespace liemirror

#endif
