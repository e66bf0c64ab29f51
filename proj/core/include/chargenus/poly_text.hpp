#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chargenus/rational.hpp"

namespace chargenus::detail {

using SparsePoly = std::map<std::vector<int>, Rational>;

/// Parses the polynomial text grammar: sums of terms `c`, `c*y^k`,
/// `c*u^a*v^b` with integer or `p/q` coefficients. Parenthesized
/// sub-expressions and `^` on them are accepted as a convenience.
/// Throws ParseError with 1-based line/column.
SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            bool allow_negative_exponents = false);

/// Prints one term's coefficient and monomial, e.g. "3/2*u^2*v". `first`
/// controls whether a leading "+" separator is emitted.
std::string format_term(const Rational& coefficient, const std::string& monomial, bool first,
                        bool spaced);

}  // namespace chargenus::detail
