#pragma once

#include <string>
#include <vector>

#include "hourglass/errors.hpp"
#include "hourglass/formula.hpp"

namespace hourglass {

// Parses a formula expression:
//
//   formula := implic ;
//   implic  := disj ( "->" implic )? ;        -- "->" is right-associative
//   disj    := conj ( "|" conj )* ;
//   conj    := neg ( "&" neg )* ;
//   neg     := "!" neg | prim ;
//   prim    := "true" | "false" | IDENT | "(" formula ")" ;
//
// Every identifier must name an atom of vocab. Throws SyntaxError or
// UnknownAtom.
Formula parse_formula(const std::string& text, const std::vector<Atom>& vocab);

}  // namespace hourglass
