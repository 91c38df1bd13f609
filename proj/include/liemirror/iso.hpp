#ifndef LIEMIRROR_ISO_HPP
#define LIEMIRROR_ISO_HPP

#include <functional>
#include <optional>
#include <vector>

#include "liemirror/lie_algebra.hpp"

namespace liemirror {

/// Change of basis from A to B: column i holds the B-coordinates of the
/// image of A's i-th basis vector.
struct IsoWitness {
  MatQ matrix;
};

/// Exact check that w transports A's bracket onto B's on all basis pairs.
/// Throws DimensionMismatch when dim A != dim B or w has the wrong shape.
bool verify_isomorphism(const LieQ& a, const LieQ& b, const IsoWitness& w);

struct IsoSearchOptions {
  std::vector<MatQ> hints;       // tried first, in order
  long budget = 2'000'000;       // candidate examination cap
  unsigned seed = 0;             // nonzero shuffles the enumeration order
  bool try_shears = true;        // second search tier
  // Optional extra acceptance condition (e.g. structure preservation).
  std::function<bool(const MatQ&)> accept;
};

struct IsoSearchResult {
  std::optional<IsoWitness> witness;
  bool fingerprint_mismatch = false;
  bool budget_exceeded = false;
  long candidates_examined = 0;
};

/// Bounded search for an isomorphism witness between nilpotent algebras.
/// Looks for generalized-permutation witnesses (basis permutation combined
/// with exactly solved rational scalings) and optionally composes with small
/// elementary shears. A miss is inconclusive.
IsoSearchResult find_isomorphism(const LieQ& a, const LieQ& b,
                                 const IsoSearchOptions& opts = {});

}  // namespace liemirror

#endif
