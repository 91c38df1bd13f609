#ifndef LIEMIRROR_OBSTRUCTIONS_HPP
#define LIEMIRROR_OBSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "liemirror/lie_algebra.hpp"
#include "liemirror/semidirect.hpp"

namespace liemirror {

/// Certificate that an algebra carries no symplectic form: a vector lying in
/// the radical of every closed two-form. Checking it amounts to linear
/// algebra: closed_basis spans the closed two-forms and radical annihilates
/// each one.
struct NoSymplecticCertificate {
  int closed_dim = 0;
  std::vector<MatQ> closed_basis;
  std::vector<Rat> radical;
};

/// Searches for a common radical vector of all closed two-forms.
std::optional<NoSymplecticCertificate> no_symplectic_certificate(const LieQ& l);

/// Exact replay of a stored certificate.
bool check_no_symplectic_certificate(const LieQ& l, const NoSymplecticCertificate& c);

/// One admissible complex structure in the h6 sweep, with the solved space
/// of compatible closed Lagrangian forms.
struct H6GridPoint {
  MatQ a;                 // the 3x3 block J(b_i) = sum_j a(i,j) f_j
  int solution_dim = 0;   // dim of the compatible closed Lagrangian forms
  bool forced_pattern = false;  // b43 = b52 = b54 = b56 = 0 on all of them
  bool degenerate = false;      // every solution has det = 0
};

struct H6SweepResult {
  long candidates = 0;
  long all_degenerate = 0;
  long pattern_failures = 0;
  bool complete_on_sample = false;  // integrability <=> the linear constraints
  std::vector<H6GridPoint> sample;  // a few stored grid points for the report
};

/// Sweeps every totally real integrable J on the Heisenberg-base h6 with
/// block entries of height <= 2 and certifies that each admissible J forces
/// a degenerate form, reproducing the b43 = b52 = b54 = b56 = 0 collapse.
H6SweepResult h6_special_lagrangian_sweep();

}  // namespace liemirror

#endif
