#pragma once

#include <functional>
#include <string>

#include "hourglass/formula.hpp"
#include "lexer.hpp"

namespace hourglass::detail {

// Called for every atom reference; throws UnknownAtom or ForwardReference
// when the name does not resolve.
using AtomCheck = std::function<void(const std::string&, SourcePos)>;

// Parses one formula starting at the stream cursor and stops at the first
// token that cannot extend it (the scenario grammar relies on this to end
// formulas at 'gives', ',', ';' or '}').
Formula parse_formula_tokens(TokenStream& ts, const AtomCheck& check_atom);

}  // namespace hourglass::detail
