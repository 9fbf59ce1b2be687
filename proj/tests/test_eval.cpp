#include <doctest.h>

#include "hml/corpus.hpp"
#include "hml/eval.hpp"
#include "hml/formula_io.hpp"
#include "hml/harness.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

bool eval_text(const TransitionSystem& ts, const std::string& state, const std::string& text) {
  EvalEnvironment env(ts);
  return std::visit([&](const auto& phi) { return satisfies(env, ts.parse_state(state), phi); },
                    parse_any_formula(text));
}

std::vector<FiniteLts> small_systems(Rng& rng) {
  std::vector<FiniteLts> out{a_loop(), deadlock(),
                             FiniteLts(3, {{0, "a", 1}, {0, "a", 2}, {2, "a", 2}, {1, "b", 1}}, 0),
                             FiniteLts(2, {{0, "a", 0}, {0, "b", 1}}, 0)};
  for (int i = 0; i < 12; ++i) out.push_back(random_lts(rng, {"a", "b"}, 4, 0.3));
  return out;
}

}  // namespace

TEST_CASE("basic satisfaction") {
  TransitionSystem loop = a_loop();
  TransitionSystem dead = deadlock();
  CHECK(eval_text(loop, "0", "T"));
  CHECK(eval_text(dead, "0", "T"));
  CHECK(eval_text(loop, "0", "<a> <a> <a> T"));
  CHECK_FALSE(eval_text(dead, "0", "<a> T"));
  CHECK(eval_text(dead, "0", "[a] F"));
  CHECK_FALSE(eval_text(loop, "0", "[a] F"));
  CHECK(eval_text(loop, "0", "AND{n in N} <a>^n T"));
  CHECK_FALSE(eval_text(dead, "0", "AND{n in N} <a>^n T"));
  CHECK(eval_text(dead, "0", "OR{n in N} [a]^n F"));
  CHECK_FALSE(eval_text(loop, "0", "OR{n in N} [a]^n F"));
  CHECK_THROWS_AS(eval_text(loop, "3", "T"), Error);
}

TEST_CASE("agreement with the recursive oracle on finite systems") {
  Rng rng(11);
  auto systems = small_systems(rng);
  for (int i = 0; i < 150; ++i) {
    Formula phi = gen::formula(rng, {"a", "b"}, {3, 0.3, true, true});
    PosFormula pos = gen::pos_formula(rng, {"a", "b"}, {3, 0.0, true, true});
    for (const auto& lts : systems) {
      EvalEnvironment env(lts);
      EvalEnvironment plain(lts, false);
      std::vector<bool> set = satisfying_set(env, phi.ptr());
      std::size_t horizon = lts.state_count() + 3;
      for (State s = 0; s < lts.state_count(); ++s) {
        bool expected = oracle::eval(lts, s, phi.node(), horizon);
        CHECK(satisfies(env, s, phi) == expected);
        CHECK(satisfies(plain, s, phi) == expected);
        CHECK(set[s] == expected);
        CHECK(satisfies(env, s, pos) == oracle::eval(lts, s, pos.node(), horizon));
      }
    }
  }
}

TEST_CASE("projected states agree with the unrolled tree") {
  Rng rng(12);
  auto systems = small_systems(rng);
  for (int i = 0; i < 60; ++i) {
    Formula phi = gen::formula(rng, {"a", "b"}, {3, 0.3, true, true});
    for (const auto& lts : systems) {
      EvalEnvironment env(lts);
      for (State s = 0; s < lts.state_count(); ++s) {
        for (std::size_t n = 0; n <= 3; ++n) {
          FiniteLts tree = oracle::unfold(lts, s, n);
          bool expected = oracle::eval(tree, 0, phi.node(), tree.state_count() + 2);
          CHECK(satisfies(env, project(lts, s, n), phi) == expected);
        }
      }
    }
  }
}

TEST_CASE("family systems") {
  auto [left, right] = counterexample_pair();
  CHECK_FALSE(eval_text(left, "root", "<a> AND{n in N} <a>^n T"));
  CHECK(eval_text(right, "root", "<a> AND{n in N} <a>^n T"));
  CHECK(eval_text(left, "root", "<a> AND{n in {0,3,7}} <a>^n T"));
  CHECK(eval_text(left, "chain(3)", "<a> <a> <a> T"));
  CHECK_FALSE(eval_text(left, "chain(3)", "<a> <a> <a> <a> T"));
  CHECK(eval_text(left, "root", "[a] OR{n in N} [a]^n F"));
  CHECK_FALSE(eval_text(right, "root", "[a] OR{n in N} [a]^n F"));
  CHECK(eval_text(left, "root", "not <a> AND{n in N} <a>^n T"));
  // A projection is a finite tree, so the infinite conjunction fails there
  // while the finite prefix that fits the budget holds.
  EvalEnvironment env(right);
  Formula inf = parse_formula("<a> AND{n in N} <a>^n T");
  for (std::size_t n = 0; n <= 4; ++n) {
    ProjectedState p = project(right, right.root(), n);
    CHECK_FALSE(satisfies(env, p, inf));
    if (n >= 1) {
      Formula fits = diamond("a", conj_family(power("a", top<Hml>()), IndexSet::range(0, n - 1)));
      CHECK(satisfies(env, p, fits));
    }
  }
  CHECK_THROWS_AS(eval_text(left, "root", "<a> AND{n in N} <b> <a>^n T"), UnsupportedFamily);
}

TEST_CASE("oracle depth treats decided families as depth 0") {
  CHECK(oracle_depth(parse_formula("<a> AND{n in N} <a>^n T").node()) == 1);
  CHECK(oracle_depth(parse_formula("<a> AND{n in N} <b> <a>^n T").node()) == kInfinite);
  CHECK(oracle_depth(parse_formula("<a> AND{n in {2,3}} <a>^n T").node()) == 4);
}

TEST_CASE("memo can be cleared") {
  EvalEnvironment env(a_loop());
  CHECK(satisfies(env, 0, parse_formula("<a> <a> T")));
  CHECK(env.memo_size() > 0);
  env.clear_memo();
  CHECK(env.memo_size() == 0);
  CHECK(env.schematic_bound() == 1);
}
