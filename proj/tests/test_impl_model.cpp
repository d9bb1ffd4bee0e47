#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "hourglass/program.hpp"
#include "oracle.hpp"

using namespace hourglass;

namespace {

Formula atom(const char* name) { return Formula::atom(name); }

Specification spec(const char* name, std::initializer_list<Formula> fs) {
  return {name, Theory(std::vector<Formula>(fs)), {}};
}

const std::vector<Atom> kVocab = {
    {"a", {}}, {"b", {}}, {"c", {}}, {"x", {}}, {"y", {}}};

// p = { when a gives x; when a & b gives y }
Program two_rule_program() {
  return {"P",
          {{atom("a"), atom("x")},
           {Formula::conjunction(atom("a"), atom("b")), atom("y")}}};
}

}  // namespace

TEST_SUITE("impl-model") {

TEST_CASE("apply fires exactly the entailed guards") {
  Program p = two_rule_program();
  Theory from_a = apply(p, spec("S", {atom("a")}), kVocab);
  CHECK(from_a.size() == 1);
  CHECK(from_a.contains(atom("x")));

  Theory from_ab = apply(p, spec("S", {atom("a"), atom("b")}), kVocab);
  CHECK(from_ab.size() == 2);
  CHECK(from_ab.contains(atom("x")));
  CHECK(from_ab.contains(atom("y")));

  Theory from_c = apply(p, spec("S", {atom("c")}), kVocab);
  CHECK(from_c.empty());
}

TEST_CASE("apply does not pass the base theory through") {
  Program p = two_rule_program();
  Theory result = apply(p, spec("S", {atom("a")}), kVocab);
  CHECK_FALSE(result.contains(atom("a")));
}

TEST_CASE("the no-op program derives nothing") {
  Program noop{"NOOP", {}};
  CHECK(apply(noop, spec("S", {atom("a")}), kVocab).empty());
}

TEST_CASE("implements") {
  Program fire{"FIRE", {{atom("a"), atom("x")}}};
  Program guarded{"GUARDED",
                  {{Formula::conjunction(atom("a"), atom("b")), atom("y")}}};
  CHECK(implements(spec("L", {atom("a")}), fire, spec("U", {atom("x")}), kVocab));
  CHECK_FALSE(implements(spec("L", {atom("a")}), guarded,
                         spec("U", {atom("y")}), kVocab));
  // The empty upper theory is implemented by anything.
  CHECK(implements(spec("L", {atom("c")}), guarded, spec("U", {}), kVocab));
  CHECK(implements(spec("L", {atom("c")}), Program{"NOOP", {}}, spec("U", {}),
                   kVocab));
}

TEST_CASE("apply result is independent of rule order") {
  gen::Rng rng(8201);
  const auto vocab = gen::make_vocab(5);
  for (int i = 0; i < 50; ++i) {
    Program p{"P", {}};
    const int rules = rng.range(1, 5);
    for (int r = 0; r < rules; ++r) {
      ProductionRule rule{gen::random_formula(rng, vocab, 2),
                          gen::random_formula(rng, vocab, 2)};
      if (std::find(p.rules.begin(), p.rules.end(), rule) == p.rules.end()) {
        p.rules.push_back(rule);
      }
    }
    Specification s{"S", gen::random_theory(rng, vocab, 3, 3), {}};
    Theory forward = apply(p, s, vocab);
    std::reverse(p.rules.begin(), p.rules.end());
    Theory backward = apply(p, s, vocab);
    CHECK(forward.same_formulas(backward));
  }
}

TEST_CASE("apply is monotone in the base specification") {
  gen::Rng rng(8202);
  const auto vocab = gen::make_vocab(6);
  for (int i = 0; i < 100; ++i) {
    EntailmentEngine engine(vocab);
    Specification strong{"STRONG", gen::random_theory(rng, vocab, 4, 3), {}};
    Specification weak = gen::random_weakening(rng, strong, vocab, "WEAK");
    REQUIRE(weaker_than(weak, strong, engine));

    Program p{"P", {}};
    for (int r = 0; r < 3; ++r) {
      p.rules.push_back({gen::random_formula(rng, vocab, 2),
                         gen::random_formula(rng, vocab, 2)});
    }
    Theory from_weak = apply(p, weak, engine);
    Theory from_strong = apply(p, strong, engine);
    for (const Formula& f : from_weak.formulas()) {
      CHECK(from_strong.contains(f));  // literal set inclusion
    }
  }
}

TEST_CASE("weakening lemmas hold on random tuples") {
  gen::Rng rng(8203);
  int upward = 0, downward = 0;
  for (int i = 0; i < 300; ++i) {
    const auto vocab = gen::make_vocab(rng.range(2, 6));
    EntailmentEngine engine(vocab);
    Specification s2{"S2", gen::random_theory(rng, vocab, 4, 3), {}};
    Specification s1 = gen::random_weakening(rng, s2, vocab, "S1");
    REQUIRE(weaker_than(s1, s2, engine));

    Program p{"P", {}};
    const int rules = rng.range(1, 4);
    for (int r = 0; r < rules; ++r) {
      p.rules.push_back({gen::random_formula(rng, vocab, 1),
                         gen::random_formula(rng, vocab, 2)});
    }
    Specification t{"T", gen::random_theory(rng, vocab, 2, 2), {}};

    // A weaker base can only be easier to build upon.
    if (implements(s1, p, t, engine)) {
      ++upward;
      CHECK(implements(s2, p, t, engine));
    }
    // A weaker target can only be easier to reach.
    if (implements(t, p, s2, engine)) {
      ++downward;
      CHECK(implements(t, p, s1, engine));
    }
  }
  CHECK(upward > 10);
  CHECK(downward > 10);
}

TEST_CASE("implements agrees with the oracle") {
  gen::Rng rng(8204);
  for (int i = 0; i < 100; ++i) {
    const auto vocab = gen::make_vocab(rng.range(1, 6));
    Specification lower{"L", gen::random_theory(rng, vocab, 3, 3), {}};
    Specification upper{"U", gen::random_theory(rng, vocab, 3, 3), {}};
    Program p{"P",
              {{gen::random_formula(rng, vocab, 2),
                gen::random_formula(rng, vocab, 2)}}};
    CHECK(implements(lower, p, upper, vocab) ==
          oracle::implements(lower, p, upper, vocab));
  }
}

}  // TEST_SUITE
