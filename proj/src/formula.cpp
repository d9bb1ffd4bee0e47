#include "hourglass/formula.hpp"

#include <algorithm>
#include <cassert>

namespace hourglass {

bool is_atom_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

struct Formula::Node {
  Kind kind;
  std::string name;  // Kind::Atom
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(Formula::Kind kind, const std::string& name,
                      const Formula::Node* left, const Formula::Node* right);

std::shared_ptr<const Formula::Node> make_node(
    Formula::Kind kind, std::string name,
    std::shared_ptr<const Formula::Node> left,
    std::shared_ptr<const Formula::Node> right) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->left = std::move(left);
  node->right = std::move(right);
  node->hash = node_hash(kind, node->name, node->left.get(), node->right.get());
  return node;
}

std::size_t node_hash(Formula::Kind kind, const std::string& name,
                      const Formula::Node* left, const Formula::Node* right) {
  std::size_t h = mix(0x5bd1e995, static_cast<std::size_t>(kind));
  if (!name.empty()) h = mix(h, std::hash<std::string>{}(name));
  if (left) h = mix(h, left->hash);
  if (right) h = mix(h, right->hash);
  return h;
}

bool nodes_equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->name != b->name) return false;
  return nodes_equal(a->left.get(), b->left.get()) &&
         nodes_equal(a->right.get(), b->right.get());
}

void collect_atoms(const Formula::Node* node, std::vector<std::string>& out,
                   std::set<std::string>& seen) {
  if (!node) return;
  if (node->kind == Formula::Kind::Atom) {
    if (seen.insert(node->name).second) out.push_back(node->name);
    return;
  }
  collect_atoms(node->left.get(), out, seen);
  collect_atoms(node->right.get(), out, seen);
}

}  // namespace

Formula Formula::truth() {
  static const auto node = make_node(Kind::True, "", nullptr, nullptr);
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = make_node(Kind::False, "", nullptr, nullptr);
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  return Formula(make_node(Kind::Atom, std::move(name), nullptr, nullptr));
}

Formula Formula::negation(Formula f) {
  return Formula(make_node(Kind::Not, "", std::move(f.node_), nullptr));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::And, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::Or, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::Implies, "", std::move(lhs.node_), std::move(rhs.node_)));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  assert(node_->kind == Kind::Atom);
  return node_->name;
}

Formula Formula::operand() const { return left(); }

Formula Formula::left() const {
  assert(node_->left);
  return Formula(node_->left);
}

Formula Formula::right() const {
  assert(node_->right);
  return Formula(node_->right);
}

bool Formula::operator==(const Formula& other) const {
  return nodes_equal(node_.get(), other.node_.get());
}

std::size_t Formula::hash() const { return node_->hash; }

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_atoms(node_.get(), out, seen);
  return out;
}

namespace {

// Precedence levels used for minimal parenthesization. Higher binds tighter.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecNot = 4;
constexpr int kPrecPrim = 5;

void render(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      return;
    case Formula::Kind::False:
      out += "false";
      return;
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Not:
      if (min_prec > kPrecNot) {
        out += '(';
        render(f, 0, out);
        out += ')';
      } else {
        out += '!';
        render(f.operand(), kPrecNot, out);
      }
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      int prec = f.kind() == Formula::Kind::And   ? kPrecAnd
                 : f.kind() == Formula::Kind::Or  ? kPrecOr
                                                  : kPrecImplies;
      const char* op = f.kind() == Formula::Kind::And   ? " & "
                       : f.kind() == Formula::Kind::Or  ? " | "
                                                        : " -> ";
      if (min_prec > prec) {
        out += '(';
        render(f, 0, out);
        out += ')';
        return;
      }
      // "&" and "|" parse left-associatively, "->" right-associatively.
      bool right_assoc = f.kind() == Formula::Kind::Implies;
      render(f.left(), right_assoc ? prec + 1 : prec, out);
      out += op;
      render(f.right(), right_assoc ? prec : prec + 1, out);
      return;
    }
  }
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

Theory::Theory(std::vector<Formula> formulas) {
  for (auto& f : formulas) add(std::move(f));
}

void Theory::add(Formula f) {
  if (!contains(f)) formulas_.push_back(std::move(f));
}

bool Theory::contains(const Formula& f) const {
  return std::any_of(formulas_.begin(), formulas_.end(),
                     [&](const Formula& g) { return g == f; });
}

bool Theory::same_formulas(const Theory& other) const {
  if (formulas_.size() != other.formulas_.size()) return false;
  return std::all_of(formulas_.begin(), formulas_.end(),
                     [&](const Formula& f) { return other.contains(f); });
}

}  // namespace hourglass
