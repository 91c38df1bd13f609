#ifndef LIEMIRROR_JSON_IO_HPP
#define LIEMIRROR_JSON_IO_HPP

#include <json.hpp>

#include "liemirror/lie_algebra.hpp"
#include "liemirror/semidirect.hpp"

namespace liemirror {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const MatQ& m);
Json to_json(const LieQ& l);
Json to_json(const Representation& rho);
Json to_json(const SemidirectProduct& sd);

/// Loaders validate: Jacobi, representation law, antisymmetry, J*J = -I.
/// Throw ParseError on malformed documents and ValidationError (or
/// JacobiFailure) on structurally invalid ones.
Rat rat_from_json(const Json& j);
MatQ matrix_from_json(const Json& j);
LieQ lie_from_json(const Json& j);
Representation representation_from_json(const Json& j);
SemidirectProduct semidirect_from_json(const Json& j);

MatQ load_two_form(const Json& j, int dim);          // matrix or e-notation
MatQ load_complex_structure(const Json& j, int dim); // validated J*J = -I

}  // namespace liemirror

#endif
