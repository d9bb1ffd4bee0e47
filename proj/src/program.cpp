#include "hourglass/program.hpp"

namespace hourglass {

Theory apply(const Program& p, const Specification& base,
             EntailmentEngine& engine) {
  Theory result;
  for (const ProductionRule& rule : p.rules) {
    if (engine.entails(base.theory, rule.guard)) {
      result.add(rule.gives);
    }
  }
  return result;
}

Theory apply(const Program& p, const Specification& base,
             const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return apply(p, base, engine);
}

bool implements(const Specification& lower, const Program& p,
                const Specification& upper, EntailmentEngine& engine) {
  return engine.theory_entails(apply(p, lower, engine), upper.theory);
}

bool implements(const Specification& lower, const Program& p,
                const Specification& upper, const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return implements(lower, p, upper, engine);
}

}  // namespace hourglass
