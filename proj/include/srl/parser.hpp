#pragma once

// Text format for collections (".srl" files):
//
//   M = 2
//   A1 := Tr(A2) = 1        # A1: "A2 is true"
//   A2 := Tr(A1) = 0        # A2: "A1 is false"
//
// Second level: `|`, `&`, `!` over leaves `Tr(<first-level>) = b` or
// `Tr(<first-level>) != b`. First level: `|`, `&`, `!` over A1..AM.
// `!` binds tighter than `&`, which binds tighter than `|`; binary operators
// are left-associative. `#` starts a comment.

#include <string>
#include <string_view>

#include "srl/error.hpp"
#include "srl/formula.hpp"

namespace srl {

// Throws ParseError carrying the line/column of the offending token. The
// returned collection always passes validate().
Collection parse_collection(std::string_view text);

// Canonical text with minimal parentheses and shortest round-trip decimals.
// parse_collection(format_collection(c)) == c for every valid c.
std::string format_collection(const Collection& c);

std::string format_formula(const Level1Formula& b);
std::string format_formula(const Level2Formula& d);

// Shortest decimal that round-trips, never in scientific notation.
std::string format_value(double v);

}  // namespace srl
