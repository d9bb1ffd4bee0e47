#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hourglass/entail.hpp"
#include "hourglass/formula.hpp"

namespace hourglass {

// A named layer specification: a finite theory describing the guarantees an
// interface provides. Annotations are free-form strings passed through to
// reports; they carry no semantics.
struct Specification {
  std::string name;
  Theory theory;
  std::vector<std::pair<std::string, std::string>> annotations;

  friend bool operator==(const Specification&, const Specification&) = default;
};

// s1 is weaker than s2 iff the theory of s2 entails every statement of s1.
// Weakness is a preorder: reflexive and transitive, not antisymmetric.
bool weaker_than(const Specification& s1, const Specification& s2,
                 const std::vector<Atom>& vocab);
bool weaker_than(const Specification& s1, const Specification& s2,
                 EntailmentEngine& engine);

bool strictly_weaker(const Specification& s1, const Specification& s2,
                     const std::vector<Atom>& vocab);
bool strictly_weaker(const Specification& s1, const Specification& s2,
                     EntailmentEngine& engine);

// Mutual weakness. Equivalent specifications stay distinct in a universe;
// reports mark the equivalence classes.
bool equivalent(const Specification& s1, const Specification& s2,
                const std::vector<Atom>& vocab);
bool equivalent(const Specification& s1, const Specification& s2,
                EntailmentEngine& engine);

}  // namespace hourglass
