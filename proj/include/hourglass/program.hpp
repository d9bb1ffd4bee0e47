#pragma once

#include <string>
#include <vector>

#include "hourglass/entail.hpp"
#include "hourglass/formula.hpp"
#include "hourglass/spec.hpp"

namespace hourglass {

// "when <guard> gives <conclusion>": running the program atop a layer whose
// theory entails the guard yields the conclusion at the layer above.
struct ProductionRule {
  Formula guard;
  Formula gives;

  friend bool operator==(const ProductionRule&, const ProductionRule&) = default;
};

// A named finite set of production rules. An empty rule set is the explicit
// no-op program.
struct Program {
  std::string name;
  std::vector<ProductionRule> rules;

  friend bool operator==(const Program&, const Program&) = default;
};

// The strongest theory the program guarantees when run atop any correct
// instantiation of the base specification: the conclusions of exactly those
// rules whose guards the base theory entails. Nothing passes through; a
// statement of the base theory reappears above only if some rule re-derives
// it.
Theory apply(const Program& p, const Specification& base,
             const std::vector<Atom>& vocab);
Theory apply(const Program& p, const Specification& base,
             EntailmentEngine& engine);

// The implements relation: program p, run atop any correct instantiation of
// lower, yields a correct instantiation of upper.
bool implements(const Specification& lower, const Program& p,
                const Specification& upper, const std::vector<Atom>& vocab);
bool implements(const Specification& lower, const Program& p,
                const Specification& upper, EntailmentEngine& engine);

}  // namespace hourglass
