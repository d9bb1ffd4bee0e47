#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "hourglass/errors.hpp"
#include "hourglass/scenario.hpp"
#include "hourglass/sufficiency.hpp"
#include "oracle.hpp"

using namespace hourglass;

namespace {

Formula atom(const char* name) { return Formula::atom(name); }

Specification spec(const char* name, std::initializer_list<Formula> fs) {
  return {name, Theory(std::vector<Formula>(fs)), {}};
}

Universe tcpip() {
  return parse_scenario(find_bundled_scenario("tcpip")->text);
}

// STRONG={a,b} and its strict weakening WEAK={a}; one app reachable from
// either, so WEAK stays sufficient.
Universe weakening_universe() {
  Universe u;
  u.name = "weakening";
  u.vocab = {{"a", {}}, {"b", {}}, {"n", {}}};
  u.specs = {spec("STRONG", {atom("a"), atom("b")}), spec("WEAK", {atom("a")}),
             spec("APP", {atom("n")})};
  u.programs = {{"P", {{atom("a"), atom("n")}}}};
  u.necessary = {"APP"};
  return u;
}

}  // namespace

TEST_SUITE("sufficiency-genericness") {

TEST_CASE("empty necessary set makes everything sufficient") {
  Universe u = weakening_universe();
  u.necessary.clear();
  for (const auto& s : u.specs) CHECK(sufficient(u, s.name));
}

TEST_CASE("tcpip: the datagram layer suffices; remove TCP and it does not") {
  Universe u = tcpip();
  CHECK(sufficient(u, "IP_DATAGRAM"));
  CHECK(sufficient(u, "IP_RELIABLE"));

  Universe without_tcp = u;
  std::erase_if(without_tcp.programs,
                [](const Program& p) { return p.name == "TCP"; });
  CHECK_FALSE(sufficient(without_tcp, "IP_DATAGRAM"));
  CHECK_FALSE(sufficient(without_tcp, "IP_RELIABLE"));
}

TEST_CASE("unknown subject") {
  Universe u = weakening_universe();
  CHECK_THROWS_AS(sufficient(u, "NOPE"), UnknownSpec);
  CHECK_THROWS_AS(minimally_sufficient(u, "NOPE"), UnknownSpec);
  CHECK_THROWS_AS(generic(u, {"NOPE", 0.0, CandidateSpace::Declared}),
                  UnknownSpec);
}

TEST_CASE("minimal sufficiency rejects subjects with sufficient weakenings") {
  Universe u = weakening_universe();
  CHECK(sufficient(u, "STRONG"));
  CHECK(sufficient(u, "WEAK"));
  CHECK_FALSE(minimally_sufficient(u, "STRONG"));
  CHECK(minimally_sufficient(u, "WEAK"));
  CHECK_FALSE(minimally_sufficient(u, "APP"));  // not sufficient at all
}

TEST_CASE("minimal sufficiency matches exhaustive enumeration") {
  gen::Rng rng(8401);
  for (int i = 0; i < 30; ++i) {
    Universe u = gen::random_universe(
        rng, {.max_atoms = 5, .max_specs = 10, .max_programs = 5});
    for (const auto& s : u.specs) {
      CAPTURE(i);
      CAPTURE(s.name);
      CHECK(minimally_sufficient(u, s.name) ==
            oracle::minimally_sufficient(u, s.name));
    }
  }
}

TEST_CASE("value_of") {
  Universe u = weakening_universe();
  u.values = {{"APP", 3.0}};
  CHECK(value_of(u, {}) == 0.0);
  CHECK(value_of(u, {"APP"}) == 3.0);
  CHECK(value_of(u, {"APP", "WEAK"}) == 4.0);  // default weight 1.0
  CHECK_THROWS_AS(value_of(u, {"NOPE"}), UnknownSpec);
}

TEST_CASE("generic: epsilon zero coincides with sufficiency") {
  Universe u = weakening_universe();
  auto verdict = generic(u, {"WEAK", 0.0, CandidateSpace::Declared});
  CHECK(verdict.generic);
  CHECK(verdict.sufficient);
  auto app = generic(u, {"APP", 0.0, CandidateSpace::Declared});
  CHECK_FALSE(app.generic);  // not sufficient, epsilon irrelevant
}

TEST_CASE("generic: a zero-loss weakening defeats any positive epsilon") {
  Universe u = weakening_universe();
  auto verdict = generic(u, {"STRONG", 0.5, CandidateSpace::Declared});
  CHECK_FALSE(verdict.generic);
  CHECK(verdict.sufficient);
  REQUIRE(verdict.worst_weakening.has_value());
  CHECK(verdict.worst_weakening->candidate == "WEAK");
  CHECK(verdict.worst_weakening->loss == 0.0);
}

TEST_CASE("generic: closure mode scans conjunction-of-atom weakenings") {
  Universe u = weakening_universe();
  // Declared candidates alone leave WEAK generic; the closure also tries
  // {} and {a}, of which {} loses everything and {a} is equivalent (not a
  // strict weakening), so WEAK stays generic for epsilon up to v(N).
  auto declared = generic(u, {"WEAK", 0.5, CandidateSpace::Declared});
  CHECK(declared.generic);
  CHECK_FALSE(declared.worst_weakening.has_value());
  auto closure = generic(u, {"WEAK", 0.5, CandidateSpace::Closure});
  CHECK(closure.generic);
  REQUIRE(closure.worst_weakening.has_value());
  CHECK(closure.worst_weakening->candidate == "{}");
  CHECK(closure.worst_weakening->loss == 1.0);  // v(N) with default weight

  // STRONG falls to the declared WEAK even in closure mode.
  auto strong = generic(u, {"STRONG", 0.5, CandidateSpace::Closure});
  CHECK_FALSE(strong.generic);
  CHECK(strong.worst_weakening->loss == 0.0);
}

TEST_CASE("generic: closure mode enforces its vocabulary cap") {
  Universe u;
  u.vocab = gen::make_vocab(17);
  u.specs = {spec("S", {atom("a0")})};
  CHECK_THROWS_AS(generic(u, {"S", 0.0, CandidateSpace::Closure}),
                  VocabularyTooLarge);
  CHECK_NOTHROW(generic(u, {"S", 0.0, CandidateSpace::Declared}));
}

TEST_CASE("generic: negative epsilon is rejected") {
  Universe u = weakening_universe();
  CHECK_THROWS_AS(generic(u, {"WEAK", -1.0, CandidateSpace::Declared}), Error);
}

TEST_CASE("losses are never negative and epsilon-zero matches sufficiency") {
  gen::Rng rng(8402);
  for (int i = 0; i < 40; ++i) {
    Universe u = gen::random_universe(
        rng, {.max_atoms = 5, .max_specs = 8, .max_programs = 5});
    Analyzer analyzer(u);
    for (const auto& s : u.specs) {
      auto verdict = generic(analyzer, {s.name, 0.0, CandidateSpace::Declared});
      CHECK(verdict.generic == sufficient(analyzer, s.name));
      if (verdict.worst_weakening) CHECK(verdict.worst_weakening->loss >= 0.0);
    }
  }
}

TEST_CASE("closure-mode genericness matches subset enumeration") {
  gen::Rng rng(8405);
  for (int iter = 0; iter < 25; ++iter) {
    Universe u = gen::random_universe(
        rng, {.max_atoms = 4, .max_specs = 6, .max_programs = 4});
    const double epsilon = iter % 2 ? 0.75 : 0.0;

    for (const auto& subject : u.specs) {
      // Oracle: necessary value covered by a candidate's post image,
      // computed entirely with the enumeration oracle.
      auto loss_of = [&](const Specification& candidate) {
        Universe scratch = u;  // oracle works over declared specs only
        double covered = 0.0, total = 0.0;
        std::vector<std::string> post;
        for (const auto& t : scratch.specs) {
          for (const auto& p : scratch.programs) {
            if (oracle::implements(candidate, p, t, scratch.vocab)) {
              post.push_back(t.name);
              break;
            }
          }
        }
        for (const auto& n : scratch.necessary) {
          total += scratch.value_weight(n);
          if (std::find(post.begin(), post.end(), n) != post.end()) {
            covered += scratch.value_weight(n);
          }
        }
        return total - covered;
      };

      bool expect = oracle::sufficient(u, subject.name);
      double min_loss = -1.0;
      bool any = false;
      auto consider = [&](const Specification& candidate) {
        if (!oracle::strictly_weaker(candidate, subject, u.vocab)) return;
        const double loss = loss_of(candidate);
        if (!any || loss < min_loss) min_loss = loss;
        any = true;
        if (loss < epsilon) expect = false;
      };
      for (const auto& other : u.specs) {
        if (other.name != subject.name) consider(other);
      }
      for (std::uint64_t mask = 0; mask < (1u << u.vocab.size()); ++mask) {
        Specification candidate{"cand", {}, {}};
        for (std::size_t b = 0; b < u.vocab.size(); ++b) {
          if (mask >> b & 1) candidate.theory.add(Formula::atom(u.vocab[b].name));
        }
        consider(candidate);
      }
      if (!oracle::sufficient(u, subject.name)) expect = false;

      auto verdict = generic(u, {subject.name, epsilon, CandidateSpace::Closure});
      CAPTURE(iter);
      CAPTURE(subject.name);
      CHECK(verdict.generic == expect);
      CHECK(verdict.worst_weakening.has_value() == any);
      if (any) CHECK(verdict.worst_weakening->loss == min_loss);
    }
  }
}

TEST_CASE("the literal value-minimality predicate reduces to sufficiency") {
  gen::Rng rng(8403);
  for (int i = 0; i < 20; ++i) {
    Universe u = gen::random_universe(
        rng, {.max_atoms = 5, .max_specs = 6, .max_programs = 4});
    for (const auto& s : u.specs) {
      CHECK(value_minimally_sufficient(u, s.name) == sufficient(u, s.name));
    }
  }
}

TEST_CASE("tradeoff table: ordering and flag consistency") {
  Universe u = tcpip();
  auto rows = tradeoff_table(u);
  REQUIRE(rows.size() == u.specs.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered =
        rows[i - 1].pre_count > rows[i].pre_count ||
        (rows[i - 1].pre_count == rows[i].pre_count &&
         rows[i - 1].spec < rows[i].spec);
    CHECK(ordered);
  }
  for (const auto& row : rows) {
    CHECK(row.covered <= u.necessary.size());
    CHECK(row.sufficient == (row.covered == u.necessary.size()));
    CHECK(row.sufficient == sufficient(u, row.spec));
    CHECK(row.minimal == minimally_sufficient(u, row.spec));
  }
}

TEST_CASE("tradeoff table: a weaker spec never has fewer implementations") {
  gen::Rng rng(8404);
  for (int i = 0; i < 20; ++i) {
    Universe u = gen::random_universe(
        rng, {.max_atoms = 5, .max_specs = 8, .max_programs = 5});
    Analyzer analyzer(u);
    auto rows = tradeoff_table(analyzer);
    auto row_of = [&](const std::string& name) {
      return *std::find_if(rows.begin(), rows.end(),
                           [&](const TradeoffRow& r) { return r.spec == name; });
    };
    for (const auto& weak : u.specs) {
      for (const auto& strong : u.specs) {
        if (!analyzer.strictly(weak.name, strong.name)) continue;
        CHECK(row_of(weak.name).pre_count >= row_of(strong.name).pre_count);
        CHECK(row_of(weak.name).post_count <= row_of(strong.name).post_count);
      }
    }
  }
}

TEST_CASE("tradeoff table: empty necessary set") {
  Universe u = weakening_universe();
  u.necessary.clear();
  for (const auto& row : tradeoff_table(u)) {
    CHECK(row.sufficient);
    CHECK(row.value == 0.0);
    CHECK(row.covered == 0);
  }
}

}  // TEST_SUITE
