#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hourglass/analysis.hpp"
#include "hourglass/universe.hpp"

namespace hourglass {

// Which specifications count as potential weakenings of a subject.
// Declared: only the specs of the universe. Closure: additionally every
// conjunction-of-atoms specification over the vocabulary (2^|vocab|
// candidates, capped at kClosureVocabLimit atoms).
enum class CandidateSpace { Declared, Closure };

constexpr std::size_t kClosureVocabLimit = 16;

struct GenericnessQuery {
  std::string subject;
  double epsilon = 0.0;  // must be >= 0
  CandidateSpace space = CandidateSpace::Declared;
};

// A strict weakening of the subject and how much necessary-application value
// it gives up: loss = v(N) - v(post(candidate) ∩ N), always >= 0 under the
// weighted-sum metric.
struct Weakening {
  std::string candidate;
  double loss = 0.0;
};

struct GenericVerdict {
  bool generic = false;
  bool sufficient = false;  // the sufficiency conjunct, kept for evidence
  // Candidate minimizing loss among the strict weakenings examined; nullopt
  // when the subject has none.
  std::optional<Weakening> worst_weakening;
};

struct TradeoffRow {
  std::string spec;
  std::size_t pre_count = 0;   // |pre image|: possible implementations
  std::size_t post_count = 0;  // |post image|: possible applications
  std::size_t covered = 0;     // |post image ∩ N|
  double value = 0.0;          // v(post image ∩ N)
  bool sufficient = false;
  bool minimal = false;
};

// N ⊆ post(s): every necessary application is implementable atop s.
bool sufficient(const Universe& u, const std::string& spec_name);
bool sufficient(Analyzer& analyzer, const std::string& spec_name);

// Sufficient with no strictly weaker sufficient spec declared in the
// universe.
bool minimally_sufficient(const Universe& u, const std::string& spec_name);
bool minimally_sufficient(Analyzer& analyzer, const std::string& spec_name);

// Weighted-sum value metric; specs without a declared weight count 1.0.
double value_of(const Universe& u, const std::vector<std::string>& spec_names);

// Sufficient, and no strictly weaker declared spec reaches a strictly higher
// v(post ∩ N) than v(N). The second conjunct cannot fire under the
// monotone weighted-sum metric (post ∩ N ⊆ N), so this predicate coincides
// with sufficient(); generic() below is the operative refinement.
bool value_minimally_sufficient(const Universe& u, const std::string& spec_name);

// Generic iff sufficient and every strict weakening in the candidate space
// loses at least epsilon of necessary-application value.
GenericVerdict generic(const Universe& u, const GenericnessQuery& query);
GenericVerdict generic(Analyzer& analyzer, const GenericnessQuery& query);

// One row per declared spec, sorted by descending implementation count,
// ties by name.
std::vector<TradeoffRow> tradeoff_table(const Universe& u);
std::vector<TradeoffRow> tradeoff_table(Analyzer& analyzer);

}  // namespace hourglass
