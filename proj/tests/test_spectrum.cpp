#include <doctest.h>

#include <algorithm>

#include "hml/corpus.hpp"
#include "hml/formula_io.hpp"
#include "hml/process_term.hpp"
#include "hml/spectrum.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

FiniteLts term(const std::string& text) { return from_term(parse_term(text)); }

std::vector<std::string> texts(const CharacterizationSet& o) {
  std::vector<std::string> out;
  for (const auto& f : o.formulas) out.push_back(to_string(f));
  return out;
}

bool formula_equiv(Semantics sem, const FiniteLts& x, const FiniteLts& y, std::size_t bound) {
  EvalEnvironment ex(x), ey(y);
  return equivalent(sem, bound, ex, {x.root()}, ey, {y.root()}).equivalent;
}

}  // namespace

TEST_CASE("semantics catalogue") {
  CHECK(all_semantics().size() == 11);
  CHECK(supported_semantics().size() == 8);
  CHECK(parse_semantics("ready-simulation") == Semantics::kReadySimulation);
  CHECK_FALSE(parse_semantics("weak-bisimulation").has_value());
  CHECK_FALSE(is_supported(Semantics::kFailureTrace));
  CHECK_THROWS_AS(char_formulas(Semantics::kReadyTrace, {"a"}, 2), UnsupportedSemantics);
  CHECK(default_bound(Semantics::kBisimulation, 3, 4) == 7);
  CHECK(default_bound(Semantics::kTrace, 3, 4) == 12);
}

TEST_CASE("context-free generators") {
  CHECK(texts(char_formulas(Semantics::kTrace, {"a"}, 2)) ==
        std::vector<std::string>{"T", "<a> T", "<a> <a> T"});
  auto tr = char_formulas(Semantics::kTrace, {"a", "b"}, 3);
  CHECK(tr.formulas.size() == 1 + 2 + 4 + 8);
  auto bis = char_formulas(Semantics::kBisimulation, {"a"}, 1);
  CHECK(texts(bis).front() == "T");
  // The cut image of a trace formula is again a (shorter) trace formula.
  Formula t3 = parse_formula("<a> <b> <a> T");
  CHECK(to_string(cut(2, t3)) == "<a> <b> not T");
  CHECK_THROWS_AS(char_formulas(Semantics::kBisimulation, {"a", "b"}, 4, 50), std::length_error);
}

TEST_CASE("textbook pair a.(b+c) vs a.b + a.c") {
  FiniteLts x = term("a.(b.0 + c.0)");
  FiniteLts y = term("a.b.0 + a.c.0");
  CHECK(formula_equiv(Semantics::kTrace, x, y, 4));
  CHECK(formula_equiv(Semantics::kCompletedTrace, x, y, 4));
  CHECK_FALSE(formula_equiv(Semantics::kFailures, x, y, 4));
  CHECK_FALSE(formula_equiv(Semantics::kReadiness, x, y, 4));
  CHECK_FALSE(formula_equiv(Semantics::kBisimulation, x, y, 4));
  CHECK(simulated_by(y, y.root(), x, x.root()));
  CHECK_FALSE(simulated_by(x, x.root(), y, y.root()));
  EvalEnvironment ex(x), ey(y);
  EquivResult r = equivalent(Semantics::kBisimulation, 3, ex, {x.root()}, ey, {y.root()});
  REQUIRE(r.witness);
  CHECK(satisfies(ex, x.root(), *r.witness) == r.left_satisfies);
  CHECK(satisfies(ey, y.root(), *r.witness) != r.left_satisfies);
}

TEST_CASE("trace sets against brute-force enumeration") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    FiniteLts lts = random_lts(rng, {"a", "b"}, 5, 0.3);
    for (std::size_t k = 0; k <= 5; ++k) {
      CHECK(trace_sets(lts, lts.root(), k) == oracle::traces(lts, lts.root(), k));
    }
  }
}

TEST_CASE("completed traces and failures") {
  FiniteLts x = term("a.0 + a.b.0");
  auto done = completed_traces(x, x.root(), 3);
  CHECK(done == std::set<Trace>{{"a"}, {"a", "b"}});
  auto fails = failures(x, x.root(), 2, {"a", "b"});
  CHECK(fails.count({Trace{"a"}, Alphabet{"a", "b"}}) == 1);
  CHECK(fails.count({Trace{}, Alphabet{"a"}}) == 0);
  CHECK(fails.count({Trace{}, Alphabet{"b"}}) == 1);
  auto ready = ready_sets(x, x.root(), 2);
  CHECK(ready.count({Trace{"a"}, Alphabet{"b"}}) == 1);
  CHECK(ready.count({Trace{"a"}, Alphabet{}}) == 1);
}

TEST_CASE("bisimilarity against the naive fixpoint") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    FiniteLts x = random_lts(rng, {"a", "b"}, 5, 0.3);
    FiniteLts y = random_lts(rng, {"a", "b"}, 5, 0.3);
    CHECK(bisimilar(x, x.root(), y, y.root()) == oracle::bisimilar(x, x.root(), y, y.root()));
    CHECK(bisimilar(x, x.root(), x, x.root()));
  }
  CHECK(bisimilar(a_loop(), 0, FiniteLts(2, {{0, "a", 1}, {1, "a", 0}}, 0), 0));
}

TEST_CASE("reachability example") {
  TransitionSystem x = term("b.b.a.0");
  TransitionSystem y = term("b.a.0");
  CHECK(reachable_action(x, {x.root()}, "a", 3));
  CHECK_FALSE(reachable_action(x, {x.root()}, "a", 1));
  CHECK(reachable_action(y, {y.root()}, "a", 1));
  CHECK_FALSE(reachable_action(x, project(x, x.root(), 2), "a", 5));
  CHECK(decide(Semantics::kReachabilityExample, 4, x, {x.root()}, y, {y.root()}));
  CHECK_FALSE(decide(Semantics::kReachabilityExample, 4, x, project(x, x.root(), 2), y,
                     project(y, y.root(), 2)));
  EvalEnvironment ex(x), ey(y);
  CHECK(equivalent(Semantics::kReachabilityExample, 4, ex, {x.root()}, ey, {y.root()}).equivalent);
}

TEST_CASE("guided characterization agrees with deciders on small terms") {
  auto terms = enumerate_terms({"a", "b"}, 3);
  for (std::size_t i = 0; i < terms.size(); i += 3) {
    for (std::size_t j = i; j < terms.size(); j += 5) {
      FiniteLts x = from_term(terms[i]);
      FiniteLts y = from_term(terms[j]);
      for (Semantics sem : supported_semantics()) {
        std::size_t bound = default_bound(sem, x.state_count(), y.state_count());
        CHECK(formula_equiv(sem, x, y, bound) ==
              decide(sem, bound, x, {x.root()}, y, {y.root()}));
      }
    }
  }
}
