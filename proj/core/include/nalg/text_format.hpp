#pragma once

// Plain-text file formats. `#` starts a comment; blank lines are ignored.
//
// Algebra:   field Q | field GF(p)
//            basis e1 e2 ...
//            e1 * e2 = <linear combination of basis names>   (omitted pairs are 0)
// Morphism:  [map] e1 -> <linear combination of target basis names>
//            (omitted basis elements map to 0)
// Variety:   variety <name>
//            field Q | field GF(p)                           (default Q)
//            one identity polynomial per line

#include <string>
#include <string_view>

#include "nalg/algebra.hpp"
#include "nalg/variety.hpp"

namespace nalg {

Algebra parse_algebra(std::string_view text);
std::string format_algebra(const Algebra& a);

/// Linear combination of basis names, e.g. `2 e1 - 1/3 e2` or `0`.
Vec parse_element(const Algebra& a, std::string_view text);

Morphism parse_morphism(std::string_view text, const Algebra& source, const Algebra& target);
std::string format_morphism(const Morphism& f);

IdentitySet parse_variety(std::string_view text);
std::string format_variety(const IdentitySet& v);

}  // namespace nalg
