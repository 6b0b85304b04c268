#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dforge/mpoly.hpp"

namespace dforge {

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := INT | VAR | factor '^' UINT | '(' expr ')', with unary minus.
// VAR is a or z1..z99. Throws ParseError with line and column.
MultiPoly parse_poly(std::string_view text);

// Largest exponent accepted after '^'.
inline constexpr std::uint64_t kMaxExponent = 1U << 20;

bool is_poly_variable(std::string_view name);

}  // namespace dforge
