#ifndef LIEMIRROR_SHORTHAND_HPP
#define LIEMIRROR_SHORTHAND_HPP

#include <map>
#include <string>

#include "liemirror/lie_algebra.hpp"

namespace liemirror {

/// Parses structure-equation shorthand "(0,0,0,a12,b13,(a+2b)14-(a+b)23)":
/// entry k lists de^k as signed coefficient-index-pair terms, with [e_i,e_j]
/// picking up -e_k per term ij in entry k. Parameters are substituted from
/// params before the Lie structure is assembled; the last two digits of a
/// term are its indices. Throws ParseError on malformed input and
/// JacobiFailure when the equations do not define a Lie algebra.
LieQ parse_shorthand(const std::string& text, const std::map<std::string, Rat>& params = {});

/// Inverse of parse_shorthand up to canonical term order.
std::string print_shorthand(const LieQ& l);

}  // namespace liemirror

#endif
