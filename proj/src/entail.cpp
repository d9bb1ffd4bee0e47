#include "hourglass/entail.hpp"

#include <bit>

namespace hourglass {

namespace {

// Truth pattern of atom i < 6 across the 64 assignments of one word: bit b
// holds (b >> i) & 1.
constexpr std::uint64_t kAtomPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

EntailmentEngine::EntailmentEngine(const std::vector<Atom>& vocab)
    : vocab_(vocab) {
  if (vocab_.size() > kVocabLimit) {
    throw VocabularyTooLarge(vocab_.size(), kVocabLimit);
  }
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    if (!atom_index_.emplace(vocab_[i].name, i).second) {
      throw DuplicateName(vocab_[i].name);
    }
  }
}

std::size_t EntailmentEngine::word_count() const {
  if (vocab_.size() < 6) return 1;
  return std::size_t{1} << (vocab_.size() - 6);
}

std::uint64_t EntailmentEngine::word_mask(std::size_t) const {
  if (vocab_.size() >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::uint64_t{1} << vocab_.size())) - 1;
}

void EntailmentEngine::ensure_known_atoms(const Formula& f) {
  if (checked_.contains(f)) return;
  for (const std::string& name : f.atoms()) {
    if (!atom_index_.contains(name)) throw UnknownAtom(name);
  }
  checked_.insert(f);
}

std::uint64_t EntailmentEngine::eval_word(const Formula& f,
                                          std::size_t word) const {
  switch (f.kind()) {
    case Formula::Kind::True:
      return ~std::uint64_t{0};
    case Formula::Kind::False:
      return 0;
    case Formula::Kind::Atom: {
      std::size_t i = atom_index_.at(f.atom_name());
      if (i < 6) return kAtomPattern[i];
      return (word >> (i - 6)) & 1 ? ~std::uint64_t{0} : 0;
    }
    case Formula::Kind::Not:
      return ~eval_word(f.operand(), word);
    case Formula::Kind::And:
      return eval_word(f.left(), word) & eval_word(f.right(), word);
    case Formula::Kind::Or:
      return eval_word(f.left(), word) | eval_word(f.right(), word);
    case Formula::Kind::Implies:
      return ~eval_word(f.left(), word) | eval_word(f.right(), word);
  }
  return 0;
}

const std::vector<std::uint64_t>& EntailmentEngine::table(const Formula& f) {
  auto it = tables_.find(f);
  if (it != tables_.end()) return it->second;

  std::vector<std::uint64_t> result(word_count());
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      for (std::size_t w = 0; w < result.size(); ++w) {
        result[w] = eval_word(f, w) & word_mask(w);
      }
      break;
    case Formula::Kind::Not: {
      const auto& sub = table(f.operand());
      for (std::size_t w = 0; w < result.size(); ++w) {
        result[w] = ~sub[w] & word_mask(w);
      }
      break;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      // Left/right table references stay valid: rehashing an unordered_map
      // never moves its elements.
      const auto& lhs = table(f.left());
      const auto& rhs = table(f.right());
      for (std::size_t w = 0; w < result.size(); ++w) {
        std::uint64_t value = f.kind() == Formula::Kind::And ? lhs[w] & rhs[w]
                              : f.kind() == Formula::Kind::Or
                                  ? lhs[w] | rhs[w]
                                  : ~lhs[w] | rhs[w];
        result[w] = value & word_mask(w);
      }
      break;
    }
  }
  return tables_.emplace(f, std::move(result)).first->second;
}

std::optional<std::uint64_t> EntailmentEngine::first_countermodel(
    const Theory& premises, const Formula& conclusion) {
  for (const Formula& p : premises.formulas()) ensure_known_atoms(p);
  ensure_known_atoms(conclusion);

  if (vocab_.size() <= kTableLimit) {
    // Cached-table route: premises hold and conclusion fails exactly where
    // AND(premise tables) & ~conclusion-table has a bit set.
    const std::size_t words = word_count();
    std::vector<std::uint64_t> acc(words);
    for (std::size_t w = 0; w < words; ++w) acc[w] = word_mask(w);
    for (const Formula& p : premises.formulas()) {
      const auto& t = table(p);
      for (std::size_t w = 0; w < words; ++w) acc[w] &= t[w];
    }
    const auto& concl = table(conclusion);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bad = acc[w] & ~concl[w] & word_mask(w);
      if (bad) return w * 64 + std::countr_zero(bad);
    }
    return std::nullopt;
  }

  // Chunked sweep: evaluate 64 assignments at a time without caching.
  const std::size_t words = word_count();
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t sat = word_mask(w);
    for (const Formula& p : premises.formulas()) {
      sat &= eval_word(p, w);
      if (!sat) break;
    }
    if (!sat) continue;
    std::uint64_t bad = sat & ~eval_word(conclusion, w);
    if (bad) return w * 64 + std::countr_zero(bad);
  }
  return std::nullopt;
}

bool EntailmentEngine::entails(const Theory& premises, const Formula& conclusion) {
  return !first_countermodel(premises, conclusion).has_value();
}

bool EntailmentEngine::theory_entails(const Theory& premises,
                                      const Theory& conclusions) {
  // Validate premises even when the conclusion set is empty and no
  // entailment check would touch them.
  for (const Formula& p : premises.formulas()) ensure_known_atoms(p);
  for (const Formula& c : conclusions.formulas()) {
    if (!entails(premises, c)) return false;
  }
  return true;
}

EntailmentEngine::Assignment EntailmentEngine::assignment_at(
    std::uint64_t index) const {
  Assignment out;
  out.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    out.emplace_back(vocab_[i].name, (index >> i) & 1);
  }
  return out;
}

std::optional<EntailmentEngine::EntailmentFailure>
EntailmentEngine::find_countermodel(const Theory& premises,
                                    const Theory& conclusions) {
  for (const Formula& p : premises.formulas()) ensure_known_atoms(p);
  for (const Formula& c : conclusions.formulas()) {
    if (auto index = first_countermodel(premises, c)) {
      return EntailmentFailure{c, assignment_at(*index)};
    }
  }
  return std::nullopt;
}

bool entails(const Theory& premises, const Formula& conclusion,
             const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return engine.entails(premises, conclusion);
}

bool theory_entails(const Theory& premises, const Theory& conclusions,
                    const std::vector<Atom>& vocab) {
  EntailmentEngine engine(vocab);
  return engine.theory_entails(premises, conclusions);
}

}  // namespace hourglass
