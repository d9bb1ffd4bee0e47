#include <doctest.h>

#include "generators.hpp"
#include "hourglass/entail.hpp"
#include "hourglass/errors.hpp"
#include "oracle.hpp"

using namespace hourglass;

namespace {

Theory theory(std::initializer_list<Formula> fs) {
  return Theory(std::vector<Formula>(fs));
}

Formula atom(const char* name) { return Formula::atom(name); }

}  // namespace

TEST_SUITE("entail") {

TEST_CASE("textbook verdicts") {
  const auto vocab = gen::make_vocab(0);
  const std::vector<Atom> ab = {{"a", {}}, {"b", {}}};

  CHECK(entails(theory({Formula::conjunction(atom("a"), atom("b"))}), atom("a"),
                ab));
  CHECK(entails(theory({atom("a")}),
                Formula::disjunction(atom("a"), atom("b")), ab));
  // a -> b does not force b: a=false, b=false is a countermodel.
  CHECK_FALSE(entails(theory({Formula::implication(atom("a"), atom("b"))}),
                      atom("b"), ab));

  CHECK(theory_entails(theory({atom("a"), atom("b")}),
                       theory({Formula::conjunction(atom("a"), atom("b"))}),
                       ab));
  CHECK(theory_entails(theory({atom("a")}), Theory(), ab));  // empty conclusions
  CHECK_FALSE(theory_entails(theory({Formula::disjunction(atom("a"), atom("b"))}),
                             theory({atom("a")}), ab));
}

TEST_CASE("unsatisfiable premises entail everything") {
  const std::vector<Atom> ab = {{"a", {}}, {"b", {}}};
  Theory contradiction =
      theory({atom("a"), Formula::negation(atom("a"))});
  CHECK(entails(contradiction, atom("b"), ab));
  CHECK(entails(contradiction, Formula::falsity(), ab));
}

TEST_CASE("vocabulary cap is enforced") {
  CHECK_THROWS_AS(EntailmentEngine(gen::make_vocab(25)), VocabularyTooLarge);
  CHECK_NOTHROW(EntailmentEngine(gen::make_vocab(24)));
  try {
    EntailmentEngine(gen::make_vocab(25));
  } catch (const VocabularyTooLarge& e) {
    CHECK(e.size() == 25);
    CHECK(e.limit() == 24);
  }
}

TEST_CASE("duplicate atoms in a vocabulary are rejected") {
  std::vector<Atom> vocab = {{"a", {}}, {"a", {}}};
  CHECK_THROWS_AS(EntailmentEngine{vocab}, DuplicateName);
}

TEST_CASE("references outside the vocabulary are rejected") {
  EntailmentEngine engine(gen::make_vocab(2));
  CHECK_THROWS_AS(engine.entails(Theory(), atom("zz")), UnknownAtom);
  CHECK_THROWS_AS(engine.entails(theory({atom("zz")}), Formula::truth()),
                  UnknownAtom);
  // Bad premises are rejected even when no conclusion forces their
  // evaluation.
  CHECK_THROWS_AS(engine.theory_entails(theory({atom("zz")}), Theory()),
                  UnknownAtom);
  CHECK_THROWS_AS(engine.find_countermodel(theory({atom("zz")}), Theory()),
                  UnknownAtom);
}

TEST_CASE("preorder laws on random theories") {
  gen::Rng rng(7001);
  for (int i = 0; i < 200; ++i) {
    const auto vocab = gen::make_vocab(rng.range(1, 8));
    EntailmentEngine engine(vocab);
    Theory a = gen::random_theory(rng, vocab, 6, 3);
    Theory b = gen::random_theory(rng, vocab, 6, 3);
    Theory c = gen::random_theory(rng, vocab, 6, 3);

    CHECK(engine.theory_entails(a, a));  // reflexivity
    if (engine.theory_entails(a, b) && engine.theory_entails(b, c)) {
      CHECK(engine.theory_entails(a, c));  // transitivity
    }
    if (engine.theory_entails(a, c)) {  // monotonicity
      Theory extended = a;
      extended.add(gen::random_formula(rng, vocab, 3));
      CHECK(engine.theory_entails(extended, c));
    }
  }
}

TEST_CASE("agrees with the assignment-enumeration oracle (table route)") {
  gen::Rng rng(7002);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto vocab = gen::make_vocab(rng.range(1, 12));
    EntailmentEngine engine(vocab);
    Theory premises = gen::random_theory(rng, vocab, 5, 4);
    Formula conclusion = gen::random_formula(rng, vocab, 4);
    CHECK(engine.entails(premises, conclusion) ==
          oracle::entails(premises, conclusion, vocab));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("agrees with the oracle beyond the cached-table limit") {
  gen::Rng rng(7003);
  const auto vocab = gen::make_vocab(17);  // sweep route
  EntailmentEngine engine(vocab);
  for (int i = 0; i < 40; ++i) {
    Theory premises = gen::random_theory(rng, vocab, 4, 3);
    Formula conclusion = gen::random_formula(rng, vocab, 3);
    CHECK(engine.entails(premises, conclusion) ==
          oracle::entails(premises, conclusion, vocab));
  }
}

TEST_CASE("unused vocabulary atoms never change a verdict") {
  // Also pins the cached-table route (<= 16 atoms) against the chunked
  // sweep route (> 16) on identical queries.
  gen::Rng rng(7005);
  const auto small = gen::make_vocab(6);
  for (int i = 0; i < 60; ++i) {
    Theory premises = gen::random_theory(rng, small, 4, 3);
    Formula conclusion = gen::random_formula(rng, small, 3);
    const bool base = entails(premises, conclusion, small);
    for (int padded_size : {7, 16, 17, 24}) {
      CHECK(entails(premises, conclusion, gen::make_vocab(padded_size)) == base);
    }
  }
}

TEST_CASE("countermodels satisfy premises and falsify the conclusion") {
  gen::Rng rng(7004);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const auto vocab = gen::make_vocab(rng.range(1, 10));
    EntailmentEngine engine(vocab);
    Theory premises = gen::random_theory(rng, vocab, 4, 3);
    Theory conclusions = gen::random_theory(rng, vocab, 4, 3);
    auto failure = engine.find_countermodel(premises, conclusions);
    CHECK(failure.has_value() !=
          engine.theory_entails(premises, conclusions));
    if (!failure) continue;
    ++found;
    oracle::AssignmentMap assignment(failure->assignment.begin(),
                                     failure->assignment.end());
    for (const Formula& p : premises.formulas()) {
      CHECK(oracle::eval(p, assignment));
    }
    CHECK_FALSE(oracle::eval(failure->conclusion, assignment));
  }
  CHECK(found > 20);  // the generator must exercise the failing branch
}

}  // TEST_SUITE
