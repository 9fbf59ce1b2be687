#include <doctest.h>

#include "hml/formula.hpp"
#include "hml/formula_io.hpp"
#include "hml/harness.hpp"

using namespace hml;

namespace {

Formula f(const std::string& text) { return parse_formula(text); }
PosFormula pf(const std::string& text) { return parse_pos_formula(text); }

}  // namespace

TEST_CASE("grammar validation") {
  CHECK_NOTHROW(f("and(<a> T, not <b> T)"));
  CHECK_NOTHROW(pf("or([a] F, <b> T)"));
  CHECK_THROWS_AS(f("[a] T"), ParseError);
  CHECK_THROWS_AS(pf("not T"), ParseError);
  CHECK_THROWS_AS(f("<a>^n T"), ParseError);
  CHECK_THROWS_AS(f("AND{n in N} and(<a>^n T, <b>^n T)"), ParseError);
  CHECK_NOTHROW(f("AND{n in N} not <b> <a>^n T"));
  try {
    f("and(<a> T,\n  <b> )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("printing round-trips") {
  for (const char* text :
       {"T", "not T", "<a> and(T, not <b> T)", "AND{n in N} <a>^n T", "AND{n in {0,2,5}} <b> <a>^n T",
        "<a> AND{n in N} not not <a>^n T"}) {
    CHECK(to_string(f(text)) == text);
  }
  for (const char* text : {"F", "or([a] F, <b> T)", "OR{n in N} [a]^n F", "AND{n in {1}} [b]^n F"}) {
    CHECK(to_string(pf(text)) == text);
  }
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Formula g = gen::formula(rng, {"a", "b"}, {4, 0.3, true, true});
    CHECK(parse_formula(to_string(g)) == g);
    PosFormula p = gen::pos_formula(rng, {"a", "b"}, {4, 0.0, true, true});
    CHECK(parse_pos_formula(to_string(p)) == p);
  }
}

TEST_CASE("depth and complexity") {
  CHECK(depth(f("T")) == 0);
  CHECK(depth(f("<a> not <b> T")) == 2);
  CHECK(depth(f("and(<a> T, <a> <a> T)")) == 2);
  CHECK(depth(f("AND{n in N} <a>^n T")) == kInfinite);
  CHECK(depth(f("AND{n in {1,4}} <a>^n T")) == 4);
  CHECK(depth(f("AND{n in N} <b> T")) == 1);
  CHECK(complexity(f("and(<a> T, not T)")) == 3);
  CHECK(complexity(f("<a> not T")) == 3);
  CHECK_THROWS_AS(complexity(f("AND{n in N} <a>^n T").node()), Error);
}

TEST_CASE("lambda measure") {
  Formula nested = f("AND{n in N} not <a> not <a>^n T");
  CHECK(lambda_measure(nested, LambdaMode::kFin) == 1);
  CHECK(lambda_measure(f("<a> T"), LambdaMode::kFin) == 0);
  CHECK(lambda_measure(f("AND{n in N} <b> T"), LambdaMode::kFin) == 1);
  CHECK(lambda_measure(f("AND{n in N} <b> T"), LambdaMode::kFdp) == 0);
}

TEST_CASE("template monotonicity") {
  auto mono = [](const std::string& text) {
    return template_monotonicity(parse_pos_template(text).node());
  };
  auto mono_hml = [](const std::string& text) {
    return template_monotonicity(parse_template(text).node());
  };
  CHECK(mono_hml("<a>^n T") == Monotonicity::kAntitone);
  CHECK(mono_hml("not <a>^n T") == Monotonicity::kIsotone);
  CHECK(mono_hml("<b> not not <a>^n T") == Monotonicity::kAntitone);
  CHECK(mono_hml("<b> T") == Monotonicity::kConstant);
  CHECK(mono("[a]^n F") == Monotonicity::kIsotone);
  CHECK(mono("<b> [a]^n F") == Monotonicity::kIsotone);
  CHECK(mono_hml("<a>^n <b> T") == Monotonicity::kUnknown);
}

TEST_CASE("complement and the P translation") {
  PosFormula p = pf("or([a] F, and(<b> T, T))");
  CHECK(to_string(complement(p)) == "and(<a> T, or([b] F, F))");
  CHECK(complement(complement(p)) == p);
  CHECK(to_string(complement(pf("AND{n in N} <a>^n T"))) == "OR{n in N} [a]^n F");
  CHECK(to_string(to_positive(f("not <a> not <b> T"))) == "[a] <b> T");
  CHECK(to_string(to_positive(f("not and(T, <a> T)"))) == "or(F, [a] F)");
  CHECK(to_string(to_positive(f("not AND{n in N} <a>^n T"))) == "OR{n in N} [a]^n F");
}

TEST_CASE("contexts") {
  Context d = parse_context("not <a> and([], not <b> T)");
  CHECK(context_polarity(d) == Polarity::kNegative);
  CHECK(context_polarity(parse_context("not not <a> []")) == Polarity::kPositive);
  TranslatedContext tc = translate_context(d);
  CHECK(tc.polarity == Polarity::kNegative);
  CHECK(to_string(tc.context) == "[a] or([], <b> T)");
  Formula phi = f("<b> T");
  CHECK(to_string(substitute(d, phi)) == "not <a> and(<b> T, not <b> T)");
  CHECK(to_positive(substitute(d, phi)) == substitute(tc.context, complement(to_positive(phi))));
  CHECK_THROWS_AS(parse_context("and([], [])"), ParseError);
}

TEST_CASE("cut") {
  CHECK(to_string(cut(0, f("<a> T"))) == "not T");
  CHECK(to_string(cut(0, pf("<a> T"))) == "F");
  CHECK(to_string(cut(0, pf("[a] F"))) == "T");
  CHECK(to_string(cut(1, f("<a> <b> T"))) == "<a> not T");
  CHECK(cut(3, f("<a> <b> T")) == f("<a> <b> T"));
  Formula fam = f("AND{n in N} <a>^n T");
  Formula c2 = cut(2, fam);
  CHECK(depth(c2) <= 2);
  CHECK(to_string(c2) == "and(T, <a> T, <a> <a> T, <a> <a> not T)");
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Formula g = gen::formula(rng, {"a", "b"}, {4, 0.3, true, true});
    for (std::size_t n = 0; n <= 4; ++n) CHECK(depth(cut(n, g)) <= n);
  }
}

TEST_CASE("addresses and finite sub-conjunctions") {
  Formula g = f("and(<b> T, <a> AND{n in N} <a>^n T)");
  auto addrs = infinite_families(g.node(), false);
  REQUIRE(addrs.size() == 1);
  CHECK(addrs[0] == Address{1, 0});
  auto subs = finite_subconjunctions(g, addrs[0], 3);
  CHECK(subs.size() == 15);  // non-empty subsets of {0..3}
  CHECK(to_string(subs[0]) == "and(<b> T, <a> AND{n in {0}} <a>^n T)");
  CHECK(to_string(subs[14]) == "and(<b> T, <a> AND{n in {0,1,2,3}} <a>^n T)");
  auto [ctx, sub] = split_at(g, addrs[0]);
  CHECK(to_string(ctx) == "and(<b> T, <a> [])");
  CHECK(substitute(ctx, sub) == g);
  CHECK(infinite_families(f("AND{n in N} <b> T").node(), true).empty());
  CHECK_THROWS_AS(finite_subconjunctions(g.node(), Address{0}, 2), Error);
}

TEST_CASE("canonical measures unfold sharing") {
  Formula leaf = f("not <a> T");
  Formula g = conj<Hml>({leaf, leaf, neg(leaf)});
  CHECK(negation_count(g.node()) == 4);
  CHECK(tree_size(g.node()) == 1 + 3 + 3 + 4);
}
