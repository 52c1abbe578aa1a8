#pragma once

#include <string>
#include <string_view>

#include "frobkit/polyring.hpp"

namespace frobkit {

/// Parses "x^2*y - 3*y^3"-style text. Integers are read modulo p; `gen`
/// names the generator of an extension field. Throws ParseError with the
/// 1-based column of the offending character.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const std::string& gen = "t");

/// "[f_0, f_1, ...]"; a bare polynomial is accepted when rank == 1.
FreeVector parse_vector(const RingPtr& ring, std::size_t rank, std::string_view text, const std::string& gen = "t");

}  // namespace frobkit
