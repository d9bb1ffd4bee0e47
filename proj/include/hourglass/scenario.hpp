#pragma once

#include <string>
#include <vector>

#include "hourglass/universe.hpp"

namespace hourglass {

// Statement keywords and formula literals; none of them can name an atom,
// spec or program.
bool is_reserved_word(const std::string& name);

// Parses scenario text:
//
//   file      := stmt* ;
//   stmt      := atom | spec | program | necessary | value | annotate ;
//   atom      := "atom" IDENT STRING? ;
//   spec      := "spec" IDENT "{" formula ("," formula)* "}" ;
//   program   := "program" IDENT "{" rule+ "}" ;
//   rule      := "when" formula "gives" formula ";" ;
//   necessary := "necessary" "{" IDENT ("," IDENT)* "}" ;
//   value     := "value" IDENT "=" NUMBER ;
//   annotate  := "annotate" IDENT IDENT "=" STRING ;
//
// '#' starts a comment running to end of line. Atom names are lowercase
// identifiers; spec and program names may also use uppercase letters. A
// leading comment of the form "# universe: NAME" names the universe. As an
// extension, "spec S { }" declares the vacuous theory and "program P { }"
// the explicit no-op program.
//
// Forward references are rejected: atoms must be declared before the specs
// and programs that use them, specs before necessary/value/annotate
// statements that mention them. At most one necessary block is allowed, and
// value/annotation assignments never override silently.
Universe parse_scenario(const std::string& text);

// Reads and parses a scenario file; the universe is named by the header
// comment or, absent one, the file stem.
Universe parse_scenario_file(const std::string& path);

// Canonical text: statements grouped by kind in declaration order.
// parse_scenario(render_scenario(u)) reconstructs an identical universe.
std::string render_scenario(const Universe& u);

struct BundledScenario {
  std::string name;
  std::string text;
};

// Case studies shipped with the toolkit, in a fixed order.
const std::vector<BundledScenario>& bundled_scenarios();
const BundledScenario* find_bundled_scenario(const std::string& name);

}  // namespace hourglass
