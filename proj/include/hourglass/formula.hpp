#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hourglass {

// One named capability guarantee, e.g. "delivers_datagram". Atom names are
// lowercase identifiers: [a-z][a-z0-9_]*.
struct Atom {
  std::string name;
  std::optional<std::string> description;

  friend bool operator==(const Atom&, const Atom&) = default;
};

bool is_atom_name(const std::string& name);

// Immutable propositional formula over a vocabulary of atoms. Copies share
// structure; structural equality and hashing are value-based.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies };

  Formula() : Formula(truth()) {}

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;  // Kind::Atom only
  Formula operand() const;               // Kind::Not only
  Formula left() const;                  // binary kinds only
  Formula right() const;                 // binary kinds only

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::size_t hash() const;

  // Names of all atoms referenced, in first-occurrence order.
  std::vector<std::string> atoms() const;

  struct Node;  // defined in formula.cpp

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend class Theory;
};

// Canonical minimally parenthesized rendering; parse_formula(render_formula(f))
// is structurally equal to f.
std::string render_formula(const Formula& f);

// A finite duplicate-free set of formulas in declaration order. The empty
// theory is the vacuous specification.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::vector<Formula> formulas);

  // Appends unless a structurally equal formula is already present.
  void add(Formula f);

  const std::vector<Formula>& formulas() const { return formulas_; }
  bool contains(const Formula& f) const;
  bool empty() const { return formulas_.empty(); }
  std::size_t size() const { return formulas_.size(); }

  // Order-sensitive identity (used by round-trip checks).
  bool operator==(const Theory& other) const { return formulas_ == other.formulas_; }
  bool operator!=(const Theory& other) const { return !(*this == other); }

  // Order-insensitive set equality.
  bool same_formulas(const Theory& other) const;

 private:
  std::vector<Formula> formulas_;
};

}  // namespace hourglass
