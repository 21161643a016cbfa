#pragma once

#include "hypersum/term.hpp"

#include <string>

namespace hypersum {

class ParseError : public Error {
public:
    ParseError(const std::string& message, size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Term grammar (ASCII): a product of factors separated by `*` or `/`.
///   factor  := rational literal | parameter symbol | (-1)^linform
///            | base^linform | fact(linform) | linform!
///            | binomial(linform, linform) | (polynomial)
///   linform := integer-linear combination of n, k, parameters, constants
/// Whitespace is insignificant. Polynomial denominators are legal in the
/// input and end up in the rational multiplier of the returned product.
TermProduct parse_term_product(const std::string& text);

/// Like parse_term_product but requires the result to be a pure term
/// (no surviving rational multiplier).
HypergeometricTerm parse_term(const std::string& text);

Polynomial parse_polynomial(const std::string& text);
RationalFunction parse_rational_function(const std::string& text);
LinearForm parse_linear_form(const std::string& text);

}  // namespace hypersum
