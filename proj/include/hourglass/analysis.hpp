#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hourglass/entail.hpp"
#include "hourglass/universe.hpp"

namespace hourglass {

enum class ImageKind { Pre, Post };

struct ImageMember {
  std::string spec;
  // Witness program in declaration order; the first one alone is retained
  // unless the analysis was asked for full witness lists.
  std::vector<std::string> witnesses;

  const std::string& witness() const { return witnesses.front(); }
};

// pre(S): every declared spec atop which some program implements S — the
// possible implementations. post(S): every declared spec some program
// implements atop S — the possible applications.
struct ImageSet {
  std::string subject;
  ImageKind kind = ImageKind::Post;
  std::vector<ImageMember> members;  // spec declaration order

  bool contains(const std::string& spec_name) const;
  std::vector<std::string> member_specs() const;
};

// weaker -> stronger ordering edge; reflexive edges are included with
// strict = false.
struct LatticeEdge {
  std::string weaker;
  std::string stronger;
  bool strict = false;

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

struct CheckedPair {
  std::string weaker;
  std::string stronger;
};

struct HourglassViolation {
  enum class Kind { PostNotSubset, PreNotSuperset };
  std::string weaker;
  std::string stronger;
  Kind kind = Kind::PostNotSubset;
  std::string offending;  // member spec breaking the inclusion
};

// Outcome of checking both image inclusions on every weaker-than pair. A
// violation would indicate an engine defect: the inclusions hold by
// construction of the implements relation.
struct VerificationReport {
  std::vector<CheckedPair> checked;
  std::vector<HourglassViolation> violations;
};

// Shared computation context over one immutable universe. Memoizes
// entailment tables, rule applications and pairwise weakness; results are
// ordered by declaration regardless of call order. Not thread-safe.
class Analyzer {
 public:
  struct Options {
    bool full_witnesses = false;
  };

  explicit Analyzer(const Universe& universe) : Analyzer(universe, Options()) {}
  Analyzer(const Universe& universe, Options options);

  const Universe& universe() const { return universe_; }
  EntailmentEngine& engine() { return engine_; }

  ImageSet post_image(const std::string& spec_name);
  ImageSet pre_image(const std::string& spec_name);

  bool weaker(const std::string& s1, const std::string& s2);
  bool strictly(const std::string& s1, const std::string& s2);

  bool more_application_rich(const std::string& s1, const std::string& s2);
  bool more_implementation_rich(const std::string& s1, const std::string& s2);

  std::vector<LatticeEdge> weakness_lattice();

  // Partition of the declared specs under mutual weakness, classes ordered
  // by their first member's declaration position.
  std::vector<std::vector<std::string>> equivalence_classes();

  VerificationReport verify_hourglass();

  // Post-image member specs of a hypothetical specification that is not part
  // of the universe (used by the closure candidate search).
  std::vector<std::string> post_member_specs_of(const Specification& candidate);

 private:
  std::size_t spec_index(const std::string& spec_name) const;
  const Theory& applied(std::size_t program, std::size_t spec);
  bool implements_cached(std::size_t lower, std::size_t program,
                         std::size_t upper);
  bool weaker_cached(std::size_t s1, std::size_t s2);
  ImageSet image(std::size_t subject, ImageKind kind);

  const Universe& universe_;
  Options options_;
  EntailmentEngine engine_;
  std::vector<std::optional<Theory>> applied_;     // program-major
  std::vector<signed char> weaker_;                // -1 unknown, 0 false, 1 true
  std::vector<std::optional<ImageSet>> pre_, post_;
};

// One-shot conveniences matching the Analyzer methods.
ImageSet post_image(const Universe& u, const std::string& spec_name);
ImageSet pre_image(const Universe& u, const std::string& spec_name);
bool more_application_rich(const Universe& u, const std::string& s1,
                           const std::string& s2);
bool more_implementation_rich(const Universe& u, const std::string& s1,
                              const std::string& s2);
std::vector<LatticeEdge> weakness_lattice(const Universe& u);
VerificationReport verify_hourglass(const Universe& u);

}  // namespace hourglass
