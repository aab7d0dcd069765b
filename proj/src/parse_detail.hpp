#pragma once

#include "hypaut/cyclo.hpp"
#include "lexer.hpp"

namespace hypaut::detail {

/// expr := [+|-] term ((+|-) term)*, term := factor (* factor)*,
/// factor := int [/ int] | zN [^ k] | ( expr ) [^ k]
CycloNum parse_scalar_expr(TokenStream& ts);

/// One scalar factor (no sums); used for polynomial coefficients.
CycloNum parse_scalar_factor(TokenStream& ts);

}  // namespace hypaut::detail
