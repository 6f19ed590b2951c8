#pragma once

#include "tpsgeo/expr.hpp"
#include "tpsgeo/model_spec.hpp"

#include <string_view>

namespace tpsgeo {

/// Recognized function names, in the order they are reported in errors.
const std::vector<std::string>& expression_function_names();

/// Parse one scalar expression. Precedence, tightest first: unary minus,
/// '^' with an integer-literal exponent, '*' '/', '+' '-'; binary operators
/// associate to the left. Throws SyntaxError / UnknownIdentifierError.
ScalarExpr parse_expr(std::string_view source, std::span<const std::string> coord_names);

/// Parse a whole model file (statements terminated by ';', '#' comments)
/// and validate every ModelSpec invariant.
ModelSpec parse_model(std::string_view source);

} // namespace tpsgeo
