#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hourglass/errors.hpp"
#include "hourglass/formula.hpp"

namespace hourglass {

// Decides classical propositional entailment over a finite vocabulary by
// exhaustive truth-assignment checking. Sound and complete for vocabularies
// of at most kVocabLimit atoms; larger vocabularies are rejected because no
// alternative complete procedure is configured.
//
// The engine memoizes per-formula truth tables, so reuse one instance when
// issuing many queries over the same vocabulary. Instances are not
// thread-safe; the free functions below are (they build a private engine).
class EntailmentEngine {
 public:
  static constexpr std::size_t kVocabLimit = 24;
  // Vocabularies up to this size get fully cached truth tables; beyond it
  // assignments are swept in 64-assignment blocks without caching.
  static constexpr std::size_t kTableLimit = 16;

  using Assignment = std::vector<std::pair<std::string, bool>>;

  struct EntailmentFailure {
    Formula conclusion;   // first conclusion that is not entailed
    Assignment assignment;  // satisfies the premises, falsifies the conclusion
  };

  explicit EntailmentEngine(const std::vector<Atom>& vocab);

  const std::vector<Atom>& vocab() const { return vocab_; }

  // True iff every assignment satisfying all premises satisfies conclusion.
  bool entails(const Theory& premises, const Formula& conclusion);

  // True iff every conclusion is entailed; vacuously true for an empty
  // conclusion set.
  bool theory_entails(const Theory& premises, const Theory& conclusions);

  // First failing conclusion in declaration order together with the lowest
  // countermodel assignment, or nullopt when the entailment holds.
  std::optional<EntailmentFailure> find_countermodel(const Theory& premises,
                                                     const Theory& conclusions);

 private:
  struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
  };
  struct FormulaEq {
    bool operator()(const Formula& a, const Formula& b) const { return a == b; }
  };

  std::size_t word_count() const;
  std::uint64_t word_mask(std::size_t word) const;
  std::uint64_t eval_word(const Formula& f, std::size_t word) const;
  const std::vector<std::uint64_t>& table(const Formula& f);
  void ensure_known_atoms(const Formula& f);
  Assignment assignment_at(std::uint64_t index) const;

  // Returns the lowest assignment index satisfying premises but not
  // conclusion, or nullopt when entailment holds.
  std::optional<std::uint64_t> first_countermodel(const Theory& premises,
                                                  const Formula& conclusion);

  std::vector<Atom> vocab_;
  std::unordered_map<std::string, std::size_t> atom_index_;
  std::unordered_map<Formula, std::vector<std::uint64_t>, FormulaHash, FormulaEq>
      tables_;
  std::unordered_set<Formula, FormulaHash, FormulaEq> checked_;
};

// Stateless convenience wrappers over a throwaway engine.
bool entails(const Theory& premises, const Formula& conclusion,
             const std::vector<Atom>& vocab);
bool theory_entails(const Theory& premises, const Theory& conclusions,
                    const std::vector<Atom>& vocab);

}  // namespace hourglass
