#pragma once

// Substituting algebra elements for the variables of a polynomial.

#include <map>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"
#include "nalg/poly.hpp"

namespace nalg {

/// Variable name -> element of the algebra.
using Assignment = std::map<std::string, Vec>;

/// Value of p under the unique morphism F{X} -> A extending the assignment.
/// Variables missing from the assignment are sent to 0.
Vec substitute(const Poly& p, const Algebra& a, const Assignment& assignment);

/// Parts of p graded by the degree in `variable`: entry i is the value of
/// the part of degree i. Computed by evaluating p at (alpha_j * a, ...) for
/// k+1 distinct scalars and inverting the Vandermonde system, never by
/// grouping monomials. Throws NotEnoughElements when the field is too small.
std::vector<Vec> vandermonde_split(const Poly& p, const std::string& variable, const Algebra& a,
                                   const Assignment& assignment);

/// Direct counterpart of vandermonde_split: groups the monomials of p by
/// their degree in `variable` and evaluates each group.
std::vector<Vec> graded_evaluation(const Poly& p, const std::string& variable, const Algebra& a,
                                   const Assignment& assignment);

}  // namespace nalg
