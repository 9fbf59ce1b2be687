#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "hml/lts.hpp"
#include "hml/process_term.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

/// Number of paths of length <= n from s: the state count of the unrolled tree.
std::size_t path_count(const FiniteLts& lts, State s, std::size_t n) {
  if (n == 0) return 1;
  std::size_t total = 1;
  for (const auto& a : lts.alphabet()) {
    for (State t : lts.successors(s, a)) total += path_count(lts, t, n - 1);
  }
  return total;
}

}  // namespace

TEST_CASE("FiniteLts indexes successors per action") {
  FiniteLts lts(3, {{0, "a", 1}, {0, "a", 2}, {1, "b", 2}}, 0);
  CHECK(lts.alphabet() == Alphabet{"a", "b"});
  CHECK(lts.successors(0, "a") == std::vector<State>{1, 2});
  CHECK(lts.successors(0, "b").empty());
  CHECK(lts.successors(0, "zz").empty());
  CHECK(lts.enabled(1) == std::vector<Action>{"b"});
  CHECK(lts.enabled(2).empty());
  CHECK_THROWS_AS(FiniteLts(2, {{0, "a", 5}}, 0), Error);
}

TEST_CASE(".aut round trip and errors") {
  std::string text = "des (0, 3, 3)\n(0, \"a\", 1)\n(1, \"b\", 2)\n(2, \"a\", 0)\n";
  FiniteLts lts = parse_aut(text);
  CHECK(lts.state_count() == 3);
  CHECK(lts.transitions().size() == 3);
  FiniteLts again = parse_aut(to_aut(lts));
  CHECK(again.transitions() == lts.transitions());
  CHECK(again.root() == lts.root());

  SUBCASE("unquoted labels") {
    FiniteLts u = parse_aut("des (0, 1, 2)\n(0, a, 1)\n");
    CHECK(u.successors(0, "a") == std::vector<State>{1});
  }
  SUBCASE("bad transition count reports a position") {
    try {
      parse_aut("des (0, 2, 2)\n(0, \"a\", 1)\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
  SUBCASE("state out of range") {
    CHECK_THROWS_AS(parse_aut("des (0, 1, 2)\n(0, \"a\", 7)\n"), ParseError);
  }
  SUBCASE("garbage line") {
    try {
      parse_aut("des (0, 1, 2)\n(0 \"a\", 1)\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("projection is lazy and lowers the budget") {
  TransitionSystem ts = a_loop();
  ProjectedState p = project(ts, 0, 2);
  CHECK(p.budget == 2);
  auto s1 = successors(ts, p, "a", kInfinite);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].budget == 1);
  auto s0 = successors(ts, s1[0], "a", kInfinite);
  REQUIRE(s0.size() == 1);
  CHECK(successors(ts, s0[0], "a", kInfinite).empty());
  CHECK(enabled(ts, s0[0]).empty());
  CHECK_THROWS_AS(project(ts, 4, 1), Error);
}

TEST_CASE("materialized projections match tree unrolling") {
  // Oracle: the unrolled tree has one state per path; the materialized system
  // merges equal (state, budget) pairs but must have the same traces.
  std::vector<FiniteLts> systems{
      a_loop(), deadlock(), FiniteLts(2, {{0, "a", 1}, {1, "b", 0}, {0, "b", 0}}, 0),
      FiniteLts(3, {{0, "a", 1}, {0, "a", 2}, {2, "a", 2}, {1, "b", 1}}, 0)};
  for (const auto& lts : systems) {
    for (std::size_t n = 0; n <= 4; ++n) {
      MaterializedProjection m = materialize(lts, project(lts, lts.root(), n));
      FiniteLts tree = oracle::unfold(lts, lts.root(), n);
      CHECK(tree.state_count() == path_count(lts, lts.root(), n));
      CHECK(oracle::traces(m.lts, 0, n + 2) == oracle::traces(tree, 0, n + 2));
      CHECK(oracle::bisimilar(m.lts, 0, tree, 0));
      for (const auto& o : m.origin) CHECK(o.budget <= n);
    }
  }
}

TEST_CASE("counterexample fixtures") {
  auto [left, right] = counterexample_pair();
  State root = left.root();
  CHECK(left.describe(root) == "root");
  State c3 = left.parse_state("chain(3)");
  CHECK(left.describe(c3) == "chain(3)");
  CHECK(left.successors(c3, "a", 5) == std::vector<State>{left.parse_state("chain(2)")});
  CHECK(left.successors(left.parse_state("chain(0)"), "a", 5).empty());
  CHECK_THROWS_AS(left.successors(root, "a", kInfinite), Error);
  CHECK(left.successors(root, "a", 3).size() == 4);
  CHECK(right.successors(root, "a", 3).size() == 5);
  CHECK_THROWS_AS(left.parse_state("loop"), Error);
  State loop = right.parse_state("loop");
  CHECK(right.infinite_path(loop, "a") == std::optional<bool>(true));
  CHECK(right.infinite_path(root, "a") == std::optional<bool>(true));
  CHECK(left.infinite_path(root, "a") == std::optional<bool>(false));
  CHECK(left.infinite_path(c3, "a") == std::optional<bool>(false));
  CHECK_FALSE(TransitionSystem(a_loop()).infinite_path(0, "a").has_value());
}

TEST_CASE("process terms") {
  ProcessTerm t = parse_term("a.(b.0 + c.0) + a.0");
  CHECK(t.size() == 4);
  CHECK(parse_term(to_string(t)) == t);
  FiniteLts lts = from_term(t);
  CHECK(lts.state_count() == 5);
  CHECK(lts.successors(0, "a").size() == 2);
  CHECK_THROWS_AS(parse_term("a."), ParseError);
  CHECK_THROWS_AS(parse_term("a.0 +"), ParseError);

  SUBCASE("enumeration covers every term once") {
    // Oracle: count terms over one action by the recurrence on multisets of summands.
    // Over {a}: sizes 0..3 give 0, a.0, a.a.0, a.0+a.0, a.a.a.0, a.(a.0+a.0), a.0+a.a.0, a.0+a.0+a.0, ...
    auto terms = enumerate_terms({"a"}, 2);
    std::set<std::string> text;
    for (const auto& x : terms) text.insert(to_string(x));
    CHECK(text.size() == terms.size());
    CHECK(text == std::set<std::string>{"0", "a.0", "a.a.0", "a.0 + a.0"});
  }
}
