#pragma once

#include <string>

#include "bisolve/bipoly.hpp"

namespace bisolve {

// Grammar (no implicit multiplication; '^' takes nonnegative integer
// exponents; rational literals written p/q):
//
//   system := poly ';' poly
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := number | 'x' | 'y' | '(' poly ')'
//   number := uint ['/' uint]
//
// Errors carry the offending input position.
BiPoly parse_poly(const std::string& text);

struct ParsedSystem {
    BiPoly f, g;
};

// Two polynomials separated by ';'.
ParsedSystem parse_system(const std::string& text);

}  // namespace bisolve
