#include "hourglass/universe.hpp"

#include <algorithm>
#include <set>

#include "hourglass/entail.hpp"
#include "hourglass/errors.hpp"

namespace hourglass {

const Specification* Universe::find_spec(const std::string& spec_name) const {
  for (const auto& s : specs) {
    if (s.name == spec_name) return &s;
  }
  return nullptr;
}

const Program* Universe::find_program(const std::string& program_name) const {
  for (const auto& p : programs) {
    if (p.name == program_name) return &p;
  }
  return nullptr;
}

bool Universe::has_atom(const std::string& atom_name) const {
  return std::any_of(vocab.begin(), vocab.end(),
                     [&](const Atom& a) { return a.name == atom_name; });
}

double Universe::value_weight(const std::string& spec_name) const {
  for (const auto& [name, weight] : values) {
    if (name == spec_name) return weight;
  }
  return 1.0;
}

void Universe::validate() const {
  if (vocab.size() > EntailmentEngine::kVocabLimit) {
    throw VocabularyTooLarge(vocab.size(), EntailmentEngine::kVocabLimit);
  }

  // Atoms, specs and programs share one namespace.
  std::set<std::string> names;
  for (const Atom& a : vocab) {
    if (!is_atom_name(a.name)) {
      throw Error("invalid atom name '" + a.name + "'");
    }
    if (!names.insert(a.name).second) throw DuplicateName(a.name);
  }
  for (const Specification& s : specs) {
    if (s.name.empty()) throw Error("specification with empty name");
    if (!names.insert(s.name).second) throw DuplicateName(s.name);
  }
  for (const Program& p : programs) {
    if (p.name.empty()) throw Error("program with empty name");
    if (!names.insert(p.name).second) throw DuplicateName(p.name);
  }

  auto check_atoms = [&](const Formula& f) {
    for (const std::string& atom : f.atoms()) {
      if (!has_atom(atom)) throw UnknownAtom(atom);
    }
  };
  for (const Specification& s : specs) {
    for (const Formula& f : s.theory.formulas()) check_atoms(f);
  }
  for (const Program& p : programs) {
    for (const ProductionRule& r : p.rules) {
      check_atoms(r.guard);
      check_atoms(r.gives);
    }
  }

  std::set<std::string> necessary_seen;
  for (const std::string& n : necessary) {
    if (!find_spec(n)) throw UnknownSpec(n);
    if (!necessary_seen.insert(n).second) throw DuplicateName(n);
  }
  std::set<std::string> value_seen;
  for (const auto& [name, weight] : values) {
    if (!find_spec(name)) throw UnknownSpec(name);
    if (!value_seen.insert(name).second) throw DuplicateValue(name);
    if (weight < 0.0) throw Error("negative value weight for '" + name + "'");
  }
}

}  // namespace hourglass
