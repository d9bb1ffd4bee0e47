#include "hourglass/spec.hpp"

namespace hourglass {

bool weaker_than(const Specification& s1, const Specification& s2,
                 EntailmentEngine& engine) {
  return engine.theory_entails(s2.theory, s1.theory);
}

bool weaker_than(const Specification& s1, const Specification& s2,
                 const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return weaker_than(s1, s2, engine);
}

bool strictly_weaker(const Specification& s1, const Specification& s2,
                     EntailmentEngine& engine) {
  return weaker_than(s1, s2, engine) && !weaker_than(s2, s1, engine);
}

bool strictly_weaker(const Specification& s1, const Specification& s2,
                     const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return strictly_weaker(s1, s2, engine);
}

bool equivalent(const Specification& s1, const Specification& s2,
                EntailmentEngine& engine) {
  return weaker_than(s1, s2, engine) && weaker_than(s2, s1, engine);
}

bool equivalent(const Specification& s1, const Specification& s2,
                const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return equivalent(s1, s2, engine);
}

}  // namespace hourglass
