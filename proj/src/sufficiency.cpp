#include "hourglass/sufficiency.hpp"

#include <algorithm>
#include <cstdint>

#include "hourglass/errors.hpp"
#include "hourglass/spec.hpp"

namespace hourglass {

namespace {

double necessary_value(const Universe& u) {
  double total = 0.0;
  for (const std::string& n : u.necessary) total += u.value_weight(n);
  return total;
}

// v(post ∩ N) given the post-image member specs.
double covered_value(const Universe& u, const std::vector<std::string>& post) {
  double total = 0.0;
  for (const std::string& n : u.necessary) {
    if (std::find(post.begin(), post.end(), n) != post.end()) {
      total += u.value_weight(n);
    }
  }
  return total;
}

bool covers_all_necessary(const Universe& u,
                          const std::vector<std::string>& post) {
  return std::all_of(u.necessary.begin(), u.necessary.end(),
                     [&](const std::string& n) {
                       return std::find(post.begin(), post.end(), n) !=
                              post.end();
                     });
}

// Synthetic conjunction-of-atoms spec for the subset encoded by mask.
Specification closure_candidate(const Universe& u, std::uint64_t mask) {
  Specification spec;
  spec.name = "{";
  for (std::size_t i = 0; i < u.vocab.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (spec.name.size() > 1) spec.name += ",";
    spec.name += u.vocab[i].name;
    spec.theory.add(Formula::atom(u.vocab[i].name));
  }
  spec.name += "}";
  return spec;
}

}  // namespace

bool sufficient(Analyzer& analyzer, const std::string& spec_name) {
  const ImageSet post = analyzer.post_image(spec_name);
  return covers_all_necessary(analyzer.universe(), post.member_specs());
}

bool sufficient(const Universe& u, const std::string& spec_name) {
  Analyzer analyzer(u);
  return sufficient(analyzer, spec_name);
}

bool minimally_sufficient(Analyzer& analyzer, const std::string& spec_name) {
  if (!sufficient(analyzer, spec_name)) return false;
  for (const Specification& other : analyzer.universe().specs) {
    if (other.name == spec_name) continue;
    if (analyzer.strictly(other.name, spec_name) &&
        sufficient(analyzer, other.name)) {
      return false;
    }
  }
  return true;
}

bool minimally_sufficient(const Universe& u, const std::string& spec_name) {
  Analyzer analyzer(u);
  return minimally_sufficient(analyzer, spec_name);
}

double value_of(const Universe& u, const std::vector<std::string>& spec_names) {
  double total = 0.0;
  for (const std::string& name : spec_names) {
    if (!u.find_spec(name)) throw UnknownSpec(name);
    total += u.value_weight(name);
  }
  return total;
}

bool value_minimally_sufficient(const Universe& u,
                                const std::string& spec_name) {
  Analyzer analyzer(u);
  if (!sufficient(analyzer, spec_name)) return false;
  const double bar = necessary_value(u);
  for (const Specification& other : u.specs) {
    if (other.name == spec_name) continue;
    if (!analyzer.strictly(other.name, spec_name)) continue;
    const double v =
        covered_value(u, analyzer.post_image(other.name).member_specs());
    if (v > bar) return false;
  }
  return true;
}

GenericVerdict generic(Analyzer& analyzer, const GenericnessQuery& query) {
  const Universe& u = analyzer.universe();
  if (query.epsilon < 0.0) throw Error("epsilon must be nonnegative");
  if (!u.find_spec(query.subject)) throw UnknownSpec(query.subject);

  GenericVerdict verdict;
  verdict.sufficient = sufficient(analyzer, query.subject);

  const double total = necessary_value(u);
  bool all_lossy_enough = true;
  auto consider = [&](const std::string& name, double loss) {
    if (loss < query.epsilon) all_lossy_enough = false;
    if (!verdict.worst_weakening || loss < verdict.worst_weakening->loss) {
      verdict.worst_weakening = Weakening{name, loss};
    }
  };

  for (const Specification& other : u.specs) {
    if (other.name == query.subject) continue;
    if (!analyzer.strictly(other.name, query.subject)) continue;
    consider(other.name,
             total - covered_value(
                         u, analyzer.post_image(other.name).member_specs()));
  }

  if (query.space == CandidateSpace::Closure) {
    if (u.vocab.size() > kClosureVocabLimit) {
      throw VocabularyTooLarge(u.vocab.size(), kClosureVocabLimit);
    }
    const Specification& subject = *u.find_spec(query.subject);
    const std::uint64_t count = std::uint64_t{1} << u.vocab.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Specification candidate = closure_candidate(u, mask);
      if (!strictly_weaker(candidate, subject, analyzer.engine())) continue;
      consider(candidate.name,
               total - covered_value(
                           u, analyzer.post_member_specs_of(candidate)));
    }
  }

  verdict.generic = verdict.sufficient && all_lossy_enough;
  return verdict;
}

GenericVerdict generic(const Universe& u, const GenericnessQuery& query) {
  Analyzer analyzer(u);
  return generic(analyzer, query);
}

std::vector<TradeoffRow> tradeoff_table(Analyzer& analyzer) {
  const Universe& u = analyzer.universe();
  std::vector<TradeoffRow> rows;
  rows.reserve(u.specs.size());
  for (const Specification& s : u.specs) {
    TradeoffRow row;
    row.spec = s.name;
    row.pre_count = analyzer.pre_image(s.name).members.size();
    const std::vector<std::string> post =
        analyzer.post_image(s.name).member_specs();
    row.post_count = post.size();
    for (const std::string& n : u.necessary) {
      if (std::find(post.begin(), post.end(), n) != post.end()) ++row.covered;
    }
    row.value = covered_value(u, post);
    row.sufficient = row.covered == u.necessary.size();
    row.minimal = minimally_sufficient(analyzer, s.name);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const TradeoffRow& a, const TradeoffRow& b) {
    if (a.pre_count != b.pre_count) return a.pre_count > b.pre_count;
    return a.spec < b.spec;
  });
  return rows;
}

std::vector<TradeoffRow> tradeoff_table(const Universe& u) {
  Analyzer analyzer(u);
  return tradeoff_table(analyzer);
}

}  // namespace hourglass
