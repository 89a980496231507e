#pragma once

#include <string_view>

#include "qlf/field.hpp"

namespace qlf {

/// Parse an expression over the field's declared variables. Grammar:
/// sums/differences of terms built with `* / ^`, integer literals reduced
/// mod p, unary minus, parentheses; whitespace-insensitive. `^` takes a
/// nonnegative integer exponent. ParseError/SemanticError carry
/// line:column positions.
RationalFunction parse_expression(const FieldPtr& field, std::string_view text);

} // namespace qlf
