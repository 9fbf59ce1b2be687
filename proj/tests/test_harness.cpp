#include <doctest.h>

#include <json.hpp>

#include "hml/harness.hpp"

using namespace hml;

namespace {

const Corpus& corpus() {
  static const Corpus c = standard_corpus(3);
  return c;
}

}  // namespace

TEST_CASE("corpus contents") {
  Corpus full = standard_corpus();
  CHECK(full.max_states() == 5);
  CHECK_NOTHROW(full.at("a-loop"));
  CHECK_NOTHROW(full.at("deadlock"));
  CHECK_NOTHROW(full.at("@left-counterexample"));
  CHECK_NOTHROW(full.at("@right-counterexample"));
  CHECK_NOTHROW(full.at("a.(b.0 + b.0)"));
  CHECK(full.finite().size() + 2 == full.entries.size());
}

TEST_CASE("report formatting") {
  CheckReport r{"demo", Verdict::kFail, 3, 9, Witness{"x:0", "y:1", "<a> T", "why"}, ""};
  CHECK(format_line(r) == "demo fail 3 9 left=x:0 right=y:1 formula=\"<a> T\" (why)");
  auto j = nlohmann::json::parse(reports_to_json({r}));
  CHECK(j[0]["verdict"] == "fail");
  CHECK(j[0]["witness"]["formula"] == "<a> T");
}

TEST_CASE("seeded checks pass on a small corpus") {
  CHECK(check_counterexample_reproduction(4).verdict == Verdict::kPass);
  CHECK(check_conjunction_compactness(corpus(), 1, 200).verdict == Verdict::kPass);
  CHECK(check_disjunction_compactness(corpus(), 2, 200).verdict == Verdict::kPass);
  CHECK(check_negation_compactness(corpus(), 3, 200).verdict == Verdict::kPass);
  CHECK(check_finite_depth_projection(corpus(), 4, 30).verdict == Verdict::kPass);
  CHECK(check_cut_lemma(corpus(), 5, 30).verdict == Verdict::kPass);
  CHECK(check_translation_coherence(corpus(), 6, 50).verdict == Verdict::kPass);
  CHECK(check_context_lemma(7, 100).verdict == Verdict::kPass);
  CHECK(check_reachability_soundness(corpus(), 8).verdict == Verdict::kPass);
  CHECK(check_aip(Semantics::kFailures, corpus(), 8).verdict == Verdict::kPass);
  CHECK(check_spectrum_inclusions(corpus(), 9, 20).verdict == Verdict::kPass);
}

TEST_CASE("checks are deterministic in their seed") {
  auto a = check_negation_compactness(corpus(), 77, 150);
  auto b = check_negation_compactness(corpus(), 77, 150);
  CHECK(format_line(a) == format_line(b));
  CHECK(a.trials == b.trials);
}

TEST_CASE("inverted controls") {
  CheckReport ctl = check_thm_hml_controls(4);
  CHECK(ctl.verdict == Verdict::kPass);
  REQUIRE(ctl.witness);
  CHECK(ctl.witness->left == "@left-counterexample:root");

  CheckReport aip = check_aip_non_fdp_control(6);
  CHECK(aip.verdict == Verdict::kPass);
  REQUIRE(aip.witness);
  CHECK(aip.witness->left == "a-loop:0");
  CHECK(aip.witness->right == "deadlock:0");

  CheckReport reach = check_necessity(Semantics::kReachabilityExample, corpus(), 6);
  CHECK(reach.verdict == Verdict::kVacuous);
  CHECK(reach.witness.has_value());
}

TEST_CASE("a non-closed O over Finite systems is vacuous") {
  CorpusEntry loop{"a-loop", a_loop()};
  CorpusEntry dead{"deadlock", deadlock()};
  OSpec single{"single", {conj_family(power("a", top<Hml>()), IndexSet::naturals())}, false};
  CheckReport r = check_thm_hml(single, {&loop, &dead}, LambdaMode::kFin, 4);
  CHECK(r.verdict == Verdict::kVacuous);
  REQUIRE(r.witness);
  CHECK(r.witness->detail.find("O distinguishes") == 0);
}
