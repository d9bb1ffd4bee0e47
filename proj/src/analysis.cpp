#include "hourglass/analysis.hpp"

#include <algorithm>

#include "hourglass/errors.hpp"

namespace hourglass {

bool ImageSet::contains(const std::string& spec_name) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const ImageMember& m) { return m.spec == spec_name; });
}

std::vector<std::string> ImageSet::member_specs() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.spec);
  return out;
}

Analyzer::Analyzer(const Universe& universe, Options options)
    : universe_(universe), options_(options), engine_(universe.vocab) {
  const std::size_t s = universe_.specs.size();
  const std::size_t p = universe_.programs.size();
  applied_.resize(p * s);
  weaker_.assign(s * s, -1);
  pre_.resize(s);
  post_.resize(s);
}

std::size_t Analyzer::spec_index(const std::string& spec_name) const {
  for (std::size_t i = 0; i < universe_.specs.size(); ++i) {
    if (universe_.specs[i].name == spec_name) return i;
  }
  throw UnknownSpec(spec_name);
}

const Theory& Analyzer::applied(std::size_t program, std::size_t spec) {
  auto& slot = applied_[program * universe_.specs.size() + spec];
  if (!slot) {
    slot = apply(universe_.programs[program], universe_.specs[spec], engine_);
  }
  return *slot;
}

bool Analyzer::implements_cached(std::size_t lower, std::size_t program,
                                 std::size_t upper) {
  return engine_.theory_entails(applied(program, lower),
                                universe_.specs[upper].theory);
}

bool Analyzer::weaker_cached(std::size_t s1, std::size_t s2) {
  auto& slot = weaker_[s1 * universe_.specs.size() + s2];
  if (slot < 0) {
    slot = engine_.theory_entails(universe_.specs[s2].theory,
                                  universe_.specs[s1].theory)
               ? 1
               : 0;
  }
  return slot == 1;
}

ImageSet Analyzer::image(std::size_t subject, ImageKind kind) {
  auto& slot = (kind == ImageKind::Post ? post_ : pre_)[subject];
  if (slot) return *slot;

  ImageSet out;
  out.subject = universe_.specs[subject].name;
  out.kind = kind;
  for (std::size_t t = 0; t < universe_.specs.size(); ++t) {
    ImageMember member;
    member.spec = universe_.specs[t].name;
    for (std::size_t p = 0; p < universe_.programs.size(); ++p) {
      bool ok = kind == ImageKind::Post ? implements_cached(subject, p, t)
                                        : implements_cached(t, p, subject);
      if (!ok) continue;
      member.witnesses.push_back(universe_.programs[p].name);
      if (!options_.full_witnesses) break;
    }
    if (!member.witnesses.empty()) out.members.push_back(std::move(member));
  }
  slot = out;
  return out;
}

ImageSet Analyzer::post_image(const std::string& spec_name) {
  return image(spec_index(spec_name), ImageKind::Post);
}

ImageSet Analyzer::pre_image(const std::string& spec_name) {
  return image(spec_index(spec_name), ImageKind::Pre);
}

bool Analyzer::weaker(const std::string& s1, const std::string& s2) {
  return weaker_cached(spec_index(s1), spec_index(s2));
}

bool Analyzer::strictly(const std::string& s1, const std::string& s2) {
  std::size_t i = spec_index(s1), j = spec_index(s2);
  return weaker_cached(i, j) && !weaker_cached(j, i);
}

namespace {

bool subset(const std::vector<std::string>& inner,
            const std::vector<std::string>& outer, std::string* offending) {
  for (const auto& name : inner) {
    if (std::find(outer.begin(), outer.end(), name) == outer.end()) {
      if (offending) *offending = name;
      return false;
    }
  }
  return true;
}

}  // namespace

bool Analyzer::more_application_rich(const std::string& s1,
                                     const std::string& s2) {
  return subset(post_image(s2).member_specs(), post_image(s1).member_specs(),
                nullptr);
}

bool Analyzer::more_implementation_rich(const std::string& s1,
                                        const std::string& s2) {
  return subset(pre_image(s2).member_specs(), pre_image(s1).member_specs(),
                nullptr);
}

std::vector<LatticeEdge> Analyzer::weakness_lattice() {
  std::vector<LatticeEdge> edges;
  for (std::size_t i = 0; i < universe_.specs.size(); ++i) {
    for (std::size_t j = 0; j < universe_.specs.size(); ++j) {
      if (!weaker_cached(i, j)) continue;
      edges.push_back({universe_.specs[i].name, universe_.specs[j].name,
                       !weaker_cached(j, i)});
    }
  }
  return edges;
}

std::vector<std::vector<std::string>> Analyzer::equivalence_classes() {
  const std::size_t n = universe_.specs.size();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::string>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::string> cls{universe_.specs[i].name};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!assigned[j] && weaker_cached(i, j) && weaker_cached(j, i)) {
        cls.push_back(universe_.specs[j].name);
        assigned[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

VerificationReport Analyzer::verify_hourglass() {
  VerificationReport report;
  for (std::size_t i = 0; i < universe_.specs.size(); ++i) {
    for (std::size_t j = 0; j < universe_.specs.size(); ++j) {
      if (!weaker_cached(i, j)) continue;
      const std::string& weaker_name = universe_.specs[i].name;
      const std::string& stronger_name = universe_.specs[j].name;
      report.checked.push_back({weaker_name, stronger_name});

      std::string offending;
      if (!subset(image(i, ImageKind::Post).member_specs(),
                  image(j, ImageKind::Post).member_specs(), &offending)) {
        report.violations.push_back({weaker_name, stronger_name,
                                     HourglassViolation::Kind::PostNotSubset,
                                     offending});
      }
      if (!subset(image(j, ImageKind::Pre).member_specs(),
                  image(i, ImageKind::Pre).member_specs(), &offending)) {
        report.violations.push_back({weaker_name, stronger_name,
                                     HourglassViolation::Kind::PreNotSuperset,
                                     offending});
      }
    }
  }
  return report;
}

std::vector<std::string> Analyzer::post_member_specs_of(
    const Specification& candidate) {
  std::vector<Theory> derived;
  derived.reserve(universe_.programs.size());
  for (const Program& p : universe_.programs) {
    derived.push_back(apply(p, candidate, engine_));
  }
  std::vector<std::string> out;
  for (const Specification& t : universe_.specs) {
    for (const Theory& d : derived) {
      if (engine_.theory_entails(d, t.theory)) {
        out.push_back(t.name);
        break;
      }
    }
  }
  return out;
}

ImageSet post_image(const Universe& u, const std::string& spec_name) {
  return Analyzer(u).post_image(spec_name);
}

ImageSet pre_image(const Universe& u, const std::string& spec_name) {
  return Analyzer(u).pre_image(spec_name);
}

bool more_application_rich(const Universe& u, const std::string& s1,
                           const std::string& s2) {
  return Analyzer(u).more_application_rich(s1, s2);
}

bool more_implementation_rich(const Universe& u, const std::string& s1,
                              const std::string& s2) {
  return Analyzer(u).more_implementation_rich(s1, s2);
}

std::vector<LatticeEdge> weakness_lattice(const Universe& u) {
  return Analyzer(u).weakness_lattice();
}

VerificationReport verify_hourglass(const Universe& u) {
  return Analyzer(u).verify_hourglass();
}

}  // namespace hourglass
