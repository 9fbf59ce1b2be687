// One line per acceptance criterion: `criterion <k> <name>: PASS|FAIL (<detail>)`.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hml/harness.hpp"

using namespace hml;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string summary(const CheckReport& r) {
  return r.name + " " + std::string(verdict_name(r.verdict)) + " " + std::to_string(r.trials);
}

Outcome all_pass(const std::vector<CheckReport>& reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += summary(r);
    if (r.verdict != Verdict::kPass) {
      o.pass = false;
      if (r.witness) o.detail += " [" + r.witness->to_string() + "]";
    }
  }
  return o;
}

}  // namespace

int main() {
  Corpus corpus = standard_corpus();
  std::size_t n_max = 2 * corpus.max_states();

  struct Criterion {
    std::string name;
    double limit_s;  // 0: untimed
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"counterexample reproduction", 1.0,
       [] { return all_pass({check_counterexample_reproduction(8)}); }},
      {"compactness suites", 60.0,
       [&] {
         std::vector<CheckReport> rs{check_conjunction_compactness(corpus, kSeed, 1000),
                                     check_disjunction_compactness(corpus, kSeed + 1, 1000),
                                     check_negation_compactness(corpus, kSeed + 2, 1000)};
         Outcome o = all_pass(rs);
         for (const auto& r : rs) o.pass = o.pass && r.trials >= 1000;
         return o;
       }},
      {"thm_hml with controls", 0.0,
       [&] {
         return all_pass({check_thm_hml(power_family_o({"a", "b"}), corpus.finite(), LambdaMode::kFin,
                                        corpus.max_states()),
                          check_thm_hml_controls(8)});
       }},
      {"hennessy-milner desk check", 30.0,
       [&] {
         CheckReport r = check_hennessy_milner(corpus, kSeed, 200);
         std::size_t n = corpus.finite().size();
         Outcome o = all_pass({r});
         o.pass = o.pass && r.trials == n * (n + 1) / 2 + 200;
         return o;
       }},
      {"finite-depth projection", 0.0,
       [&] {
         CheckReport r = check_finite_depth_projection(corpus, kSeed, 150);
         Outcome o = all_pass({r});
         o.pass = o.pass && r.witness && r.witness->detail.rfind("tightness", 0) == 0;
         if (r.witness) o.detail += " [" + r.witness->to_string() + "]";
         return o;
       }},
      {"cut lemma", 0.0, [&] { return all_pass({check_cut_lemma(corpus, kSeed, 150)}); }},
      {"aip desk check", 0.0,
       [&] {
         std::vector<CheckReport> rs;
         for (Semantics sem : {Semantics::kTrace, Semantics::kCompletedTrace, Semantics::kFailures,
                               Semantics::kReadiness, Semantics::kSimulation,
                               Semantics::kReadySimulation, Semantics::kBisimulation}) {
           rs.push_back(check_aip(sem, corpus, n_max));
         }
         rs.push_back(check_aip_non_fdp_control(n_max));
         Outcome o = all_pass(rs);
         const auto& w = rs.back().witness;
         o.pass = o.pass && w && w->left == "a-loop:0" && w->right == "deadlock:0";
         return o;
       }},
      {"necessity", 0.0,
       [&] {
         Outcome o = all_pass({check_necessity(Semantics::kBisimulation, corpus, n_max),
                               check_necessity(Semantics::kTrace, corpus, n_max)});
         CheckReport reach = check_necessity(Semantics::kReachabilityExample, corpus, n_max);
         o.detail += "; " + summary(reach);
         bool found = reach.verdict == Verdict::kVacuous && reach.witness;
         if (found) o.detail += " [" + reach.witness->left + " vs " + reach.witness->right + "]";
         o.pass = o.pass && found;
         return o;
       }},
      {"translation coherence", 0.0,
       [&] { return all_pass({check_translation_coherence(corpus, kSeed, 400)}); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(c.limit_s) + " s limit";
    }
    all = all && o.pass;
    std::cout << "criterion " << (k + 1) << " " << c.name << ": " << (o.pass ? "PASS" : "FAIL")
              << " (" << o.detail << "; " << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
