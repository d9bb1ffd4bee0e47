#include <doctest.h>

#include "generators.hpp"
#include "hourglass/errors.hpp"
#include "hourglass/formula.hpp"
#include "hourglass/formula_parser.hpp"

using namespace hourglass;

namespace {

const std::vector<Atom> kAbc = {{"a", std::nullopt},
                                {"b", std::nullopt},
                                {"c", std::nullopt}};

Formula atom(const char* name) { return Formula::atom(name); }

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("atom name pattern") {
  CHECK(is_atom_name("a"));
  CHECK(is_atom_name("delivers_datagram2"));
  CHECK_FALSE(is_atom_name(""));
  CHECK_FALSE(is_atom_name("A"));
  CHECK_FALSE(is_atom_name("2a"));
  CHECK_FALSE(is_atom_name("_a"));
  CHECK_FALSE(is_atom_name("a-b"));
}

TEST_CASE("structural equality") {
  Formula f = Formula::conjunction(atom("a"), atom("b"));
  Formula g = Formula::conjunction(atom("a"), atom("b"));
  CHECK(f == g);
  CHECK(f.hash() == g.hash());
  CHECK(f != Formula::conjunction(atom("b"), atom("a")));
  CHECK(Formula::truth() != Formula::falsity());
}

TEST_CASE("atoms are collected in first-occurrence order") {
  Formula f = Formula::implication(Formula::conjunction(atom("b"), atom("a")),
                                   atom("b"));
  CHECK(f.atoms() == std::vector<std::string>{"b", "a"});
  CHECK(Formula::truth().atoms().empty());
}

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse_formula("a & b -> c", kAbc) ==
        Formula::implication(Formula::conjunction(atom("a"), atom("b")),
                             atom("c")));
  CHECK(parse_formula("a -> b -> c", kAbc) ==
        Formula::implication(atom("a"),
                             Formula::implication(atom("b"), atom("c"))));
  CHECK(parse_formula("a | b & c", kAbc) ==
        Formula::disjunction(atom("a"),
                             Formula::conjunction(atom("b"), atom("c"))));
  CHECK(parse_formula("!a & b", kAbc) ==
        Formula::conjunction(Formula::negation(atom("a")), atom("b")));
  CHECK(parse_formula("a & b & c", kAbc) ==
        Formula::conjunction(Formula::conjunction(atom("a"), atom("b")),
                             atom("c")));
  CHECK(parse_formula("!!a", kAbc) ==
        Formula::negation(Formula::negation(atom("a"))));
  CHECK(parse_formula("( a )", kAbc) == atom("a"));
  CHECK(parse_formula("true", kAbc) == Formula::truth());
  CHECK(parse_formula("false", kAbc) == Formula::falsity());
}

TEST_CASE("parse: unknown atom carries the offending name") {
  const std::vector<Atom> vocab = {{"a", std::nullopt}, {"b", std::nullopt}};
  CHECK_THROWS_WITH_AS(parse_formula("a & d", vocab),
                       "column 5: unknown atom 'd'", UnknownAtom);
  try {
    parse_formula("a & d", vocab);
  } catch (const UnknownAtom& e) {
    CHECK(e.name() == "d");
    CHECK(e.pos().column == 5);
  }
}

TEST_CASE("parse: syntax errors carry position and expectation") {
  CHECK_THROWS_AS(parse_formula("", kAbc), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a &", kAbc), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(a", kAbc), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a b", kAbc), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a -> -> b", kAbc), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a $ b", kAbc), SyntaxError);
  try {
    parse_formula("a &", kAbc);
  } catch (const SyntaxError& e) {
    CHECK(e.pos().column == 4);  // past the end of input
  }
}

TEST_CASE("render: canonical minimal parenthesization") {
  CHECK(render_formula(Formula::implication(
            Formula::conjunction(atom("a"), atom("b")), atom("c"))) ==
        "a & b -> c");
  CHECK(render_formula(Formula::negation(
            Formula::disjunction(atom("a"), atom("b")))) == "!(a | b)");
  CHECK(render_formula(Formula::truth()) == "true");
  // Right-nested conjunction needs parentheses to survive reparsing.
  CHECK(render_formula(Formula::conjunction(
            atom("a"), Formula::conjunction(atom("b"), atom("c")))) ==
        "a & (b & c)");
  CHECK(render_formula(Formula::implication(
            Formula::implication(atom("a"), atom("b")), atom("c"))) ==
        "(a -> b) -> c");
}

TEST_CASE("round-trip property: parse(render(f)) == f") {
  gen::Rng rng(20240811);
  const std::vector<Atom> vocab = gen::make_vocab(6);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen::random_formula(rng, vocab, 8);
    CAPTURE(render_formula(f));
    CHECK(parse_formula(render_formula(f), vocab) == f);
  }
}

TEST_CASE("theory deduplicates, preserves order") {
  Theory t;
  t.add(atom("a"));
  t.add(Formula::conjunction(atom("a"), atom("b")));
  t.add(atom("a"));  // duplicate
  CHECK(t.size() == 2);
  CHECK(t.formulas()[0] == atom("a"));
  CHECK(t.contains(Formula::conjunction(atom("a"), atom("b"))));

  Theory u;
  u.add(Formula::conjunction(atom("a"), atom("b")));
  u.add(atom("a"));
  CHECK(t != u);            // order matters for identity
  CHECK(t.same_formulas(u));  // but the sets agree
}

}  // TEST_SUITE
