#ifndef LIEMIRROR_ERRORS_HPP
#define LIEMIRROR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liemirror {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LIEMIRROR_ERROR(Name)                 \
  struct Name : Error {                       \
    using Error::Error;                       \
  }

LIEMIRROR_ERROR(DimensionMismatch);
LIEMIRROR_ERROR(DegenerateForm);
LIEMIRROR_ERROR(DegreeOverflow);
LIEMIRROR_ERROR(ArityMismatch);
LIEMIRROR_ERROR(OddDimension);
LIEMIRROR_ERROR(JacobiFailure);
LIEMIRROR_ERROR(NotARepresentation);
LIEMIRROR_ERROR(NotTotallyReal);
LIEMIRROR_ERROR(NotFlatOrTorsionFree);
LIEMIRROR_ERROR(NotLagrangian);
LIEMIRROR_ERROR(NotClosed);
LIEMIRROR_ERROR(Degenerate);
LIEMIRROR_ERROR(Incompatible);
LIEMIRROR_ERROR(NotIntegrable);
LIEMIRROR_ERROR(NotSymplectic);
LIEMIRROR_ERROR(BracketMismatch);
LIEMIRROR_ERROR(NotProportional);
LIEMIRROR_ERROR(NonRationalOrthonormalization);
LIEMIRROR_ERROR(UnknownEntry);
LIEMIRROR_ERROR(ParseError);
LIEMIRROR_ERROR(ValidationError);

#undef LIEMIRROR_ERROR

}  // namespace liemirror

#endif
