#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hourglass/formula.hpp"
#include "hourglass/program.hpp"
#include "hourglass/spec.hpp"

namespace hourglass {

// The finite analysis frame: the declared vocabulary, specifications,
// admissible programs, necessary applications, and value weights. All
// analyses quantify over exactly what is declared here. Declaration order is
// preserved everywhere so that derived reports are deterministic.
struct Universe {
  std::string name;
  std::vector<Atom> vocab;
  std::vector<Specification> specs;
  std::vector<Program> programs;
  std::vector<std::string> necessary;                  // spec names
  std::vector<std::pair<std::string, double>> values;  // spec name -> weight

  const Specification* find_spec(const std::string& spec_name) const;
  const Program* find_program(const std::string& program_name) const;
  bool has_atom(const std::string& atom_name) const;

  // Declared weight, or 1.0 for specs absent from the value map.
  double value_weight(const std::string& spec_name) const;

  // Enforces the structural invariants: unique names across atoms, specs and
  // programs; valid atom identifiers; formulas over the declared vocabulary;
  // necessary and value entries resolving to declared specs; nonnegative
  // weights; vocabulary within the exhaustive-check cap. Throws the matching
  // error on the first violation.
  void validate() const;

  friend bool operator==(const Universe&, const Universe&) = default;
};

}  // namespace hourglass
