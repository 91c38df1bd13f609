#ifndef LIEMIRROR_VERIFY_HPP
#define LIEMIRROR_VERIFY_HPP

#include "liemirror/catalog.hpp"
#include "liemirror/report.hpp"

namespace liemirror {

/// The verification suites. Each returns a report whose rows embed
/// replayable evidence; verify_all() concatenates every suite.
Report verify_foundations();        // Jacobi, nilpotency, d.d = 0
Report verify_correspondences();    // connections <-> structures round trips
Report verify_duality_formulas();   // omega_J / J_omega lemmas + inverses
Report verify_family_grid();        // closed iff a+b+d=0, integrable iff b-c-d=0
Report verify_signatures();         // (4,2) family metric, (6,0) Kahler example
Report reproduce_dual_table();      // the twelve dual identifications
Report mirror_theorem_report();     // the seven-row mirror table
Report verify_dga_certificates();   // phi, lambda = 2i, DGA isomorphisms, Betti
Report obstruction_reports();       // h3, h6, h17
Report verify_examples();           // diagonal family, Kahler example, 4-dim
Report verify_volume_forms();       // Re Phi|_V = 0, Im Phi|_V != 0 for n = 3
Report verify_scaling_law();        // diagonal transport (a,b) -> +-(a,b)/s^2
Report verify_all(unsigned seed = 0);

struct CurvePointSpec {
  Rat a, b;
};
/// Certificates along the family curve: special Lagrangian structure,
/// catalog identification, and the diagonal scaling law per point.
Report curve_report(const std::vector<CurvePointSpec>& points, unsigned seed = 0);

/// Re-runs a stored report's evidence and compares row statuses.
struct ReplayResult {
  int total = 0;
  int matched = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return total == matched; }
};
ReplayResult replay_report(const Json& report);

}  // namespace liemirror

#endif
