#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/poly.hpp"

namespace brieskorn {

/// Parses the polynomial text grammar:
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer ['/' integer] | name ['^' integer]
///   name   := [a-z][a-z0-9_]*
///
/// Whitespace between tokens is ignored. Names are looked up first among
/// the x-variables, then among the s-variables; anything else is a
/// ParseError carrying the byte offset.
SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& x_vars,
                      const std::vector<std::string>& s_vars = {});

inline SparsePoly parse_poly(std::string_view text, const OrderingSpec& ord) {
  return parse_poly(text, ord.x_vars(), ord.s_vars());
}

/// A single monomial such as "x^2*y"; coefficients other than 1 are
/// rejected.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& x_vars,
                        const std::vector<std::string>& s_vars = {});

/// Distinct variable names in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace brieskorn
