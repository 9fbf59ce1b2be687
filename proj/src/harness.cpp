#include "hml/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "hml/eval.hpp"
#include "hml/formula_io.hpp"

namespace hml {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kVacuous:
      return "vacuous";
  }
  return "unknown";
}

std::string Witness::to_string() const {
  std::string out = "left=" + left;
  if (!right.empty()) out += " right=" + right;
  if (!formula.empty()) out += " formula=\"" + formula + "\"";
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

std::string format_line(const CheckReport& r) {
  std::string out = r.name + " " + std::string(verdict_name(r.verdict)) + " " +
                    std::to_string(r.trials) + " " + std::to_string(r.seed);
  if (r.witness) out += " " + r.witness->to_string();
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"name", r.name},
                     {"verdict", verdict_name(r.verdict)},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"note", r.note}};
    if (r.witness) {
      j["witness"] = {{"left", r.witness->left},
                      {"right", r.witness->right},
                      {"formula", r.witness->formula},
                      {"detail", r.witness->detail}};
    } else {
      j["witness"] = nullptr;
    }
    all.push_back(std::move(j));
  }
  return all.dump(2);
}

// Random syntax ------------------------------------------------------------------

namespace gen {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

const Action& any_action(Rng& rng, const Alphabet& alphabet) {
  return alphabet[pick(rng, alphabet.size())];
}

NodePtr top_node() { return make_node(NodeKind::kTop); }

/// Context of diamonds, negations (HML) or boxes and disjunctions (HML+),
/// and conjunctions with random siblings, around a hole.
NodePtr context_node(Rng& rng, const Alphabet& alphabet, std::size_t depth, double negation,
                     bool positive, std::size_t steps,
                     const std::function<NodePtr(std::size_t)>& sibling) {
  if (steps == 0 || coin(rng, 0.25)) return make_node(NodeKind::kHole);
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  if (!positive && coin(rng, negation)) {
    return make_node(NodeKind::kNot, {},
                     {context_node(rng, alphabet, depth, negation, positive, steps - 1, sibling)});
  }
  if (depth > 0 && r < 0.55) {
    NodeKind k = positive && coin(rng, 0.5) ? NodeKind::kBox : NodeKind::kDiamond;
    return make_node(k, any_action(rng, alphabet),
                     {context_node(rng, alphabet, depth - 1, negation, positive, steps - 1,
                                   sibling)});
  }
  NodeKind k = positive && coin(rng, 0.5) ? NodeKind::kOr : NodeKind::kAnd;
  std::vector<NodePtr> kids{sibling(depth)};
  if (coin(rng, 0.3)) kids.push_back(sibling(depth));
  std::size_t at = pick(rng, kids.size() + 1);
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(at),
              context_node(rng, alphabet, depth, negation, positive, steps - 1, sibling));
  return make_node(k, {}, std::move(kids));
}

NodePtr power_template_node(Rng& rng, const Alphabet& alphabet, std::size_t depth,
                            double negation, bool positive, std::size_t& context_depth) {
  auto sibling = [&](std::size_t d) {
    Options o{std::min<std::size_t>(d, 1), positive ? 0.0 : negation, false, false};
    return positive ? pos_formula(rng, alphabet, o).ptr() : formula(rng, alphabet, o).ptr();
  };
  NodePtr ctx = context_node(rng, alphabet, depth, negation, positive, 3, sibling);
  context_depth = hml::depth(*ctx);
  NodePtr power = positive && coin(rng, 0.5)
                      ? make_node(NodeKind::kBoxPower, any_action(rng, alphabet),
                                  {make_node(NodeKind::kBot)})
                      : make_node(NodeKind::kPower, any_action(rng, alphabet), {top_node()});
  return substitute(*ctx, power);
}

IndexSet random_finite_indices(Rng& rng, std::size_t max_index) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i <= max_index; ++i) {
    if (coin(rng, 0.5)) members.push_back(i);
  }
  if (members.empty()) members.push_back(pick(rng, max_index + 1));
  return IndexSet::of(std::move(members));
}

NodePtr formula_node(Rng& rng, const Alphabet& alphabet, const Options& opts, std::size_t depth,
                     std::size_t& fuel, bool positive) {
  NodePtr out;
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  bool families = opts.power_families || opts.finite_depth_families;
  if (fuel > 0) --fuel;
  if (depth == 0 || fuel == 0) {
    out = positive && coin(rng, 0.3) ? make_node(NodeKind::kBot) : top_node();
  } else if (r < 0.45) {
    NodeKind k = positive && coin(rng, 0.4) ? NodeKind::kBox : NodeKind::kDiamond;
    out = make_node(k, any_action(rng, alphabet),
                    {formula_node(rng, alphabet, opts, depth - 1, fuel, positive)});
  } else if (r < 0.72) {
    NodeKind k = positive && coin(rng, 0.4) ? NodeKind::kOr : NodeKind::kAnd;
    std::vector<NodePtr> kids;
    std::size_t n = 2 + pick(rng, 2);
    for (std::size_t i = 0; i < n; ++i) {
      kids.push_back(formula_node(rng, alphabet, opts, depth, fuel, positive));
    }
    out = make_node(k, {}, std::move(kids));
  } else if (r < 0.8 || !families) {
    out = positive && coin(rng, 0.3) ? make_node(NodeKind::kBot) : top_node();
  } else {
    NodeKind k = positive && coin(rng, 0.4) ? NodeKind::kOr : NodeKind::kAnd;
    bool infinite = opts.power_families && (!opts.finite_depth_families || coin(rng, 0.5));
    if (infinite) {
      std::size_t cd = 0;
      NodePtr tpl = power_template_node(rng, alphabet, depth - 1, opts.negation, positive, cd);
      out = make_node(k, {}, {tpl}, IndexSet::naturals());
    } else if (coin(rng, 0.5)) {
      NodePtr tpl = formula_node(rng, alphabet, opts, depth, fuel, positive);
      out = make_node(k, {}, {tpl}, IndexSet::naturals());
    } else {
      std::size_t cd = 0;
      NodePtr tpl = power_template_node(rng, alphabet, depth - 1, opts.negation, positive, cd);
      out = make_node(k, {}, {tpl}, random_finite_indices(rng, depth - cd));
    }
  }
  if (!positive && coin(rng, opts.negation)) out = make_node(NodeKind::kNot, {}, {out});
  return out;
}

}  // namespace

Formula formula(Rng& rng, const Alphabet& alphabet, const Options& opts) {
  std::size_t fuel = 12;
  return Formula(formula_node(rng, alphabet, opts, opts.depth, fuel, false));
}

PosFormula pos_formula(Rng& rng, const Alphabet& alphabet, const Options& opts) {
  std::size_t fuel = 12;
  return PosFormula(formula_node(rng, alphabet, opts, opts.depth, fuel, true));
}

Context context(Rng& rng, const Alphabet& alphabet, const Options& opts) {
  auto sibling = [&](std::size_t d) {
    Options o = opts;
    o.depth = d;
    return formula(rng, alphabet, o).ptr();
  };
  return Context(context_node(rng, alphabet, opts.depth, opts.negation, false, 4, sibling));
}

PosContext pos_context(Rng& rng, const Alphabet& alphabet, const Options& opts) {
  auto sibling = [&](std::size_t d) {
    Options o = opts;
    o.depth = d;
    return pos_formula(rng, alphabet, o).ptr();
  };
  return PosContext(context_node(rng, alphabet, opts.depth, 0.0, true, 4, sibling));
}

Template power_template(Rng& rng, const Alphabet& alphabet, std::size_t depth, double negation) {
  std::size_t cd = 0;
  return Template(power_template_node(rng, alphabet, depth, negation, false, cd));
}

PosTemplate pos_power_template(Rng& rng, const Alphabet& alphabet, std::size_t depth) {
  std::size_t cd = 0;
  return PosTemplate(power_template_node(rng, alphabet, depth, 0.0, true, cd));
}

}  // namespace gen

// Shared plumbing -------------------------------------------------------------

namespace {

const Alphabet kAb{"a", "b"};

std::string where(const CorpusEntry& e, ProjectedState p) {
  std::string s = e.name + ":" + e.system.describe(p.base);
  if (p.is_projected()) s = "pi_" + std::to_string(p.budget) + "(" + s + ")";
  return s;
}

/// States exercised per entry: all states of a Finite system, a sample of a Family one.
std::vector<State> sample_states(const CorpusEntry& e) {
  std::vector<State> out;
  if (e.system.is_finite()) {
    for (State s = 0; s < e.system.finite().state_count(); ++s) out.push_back(s);
    return out;
  }
  for (const char* name : {"root", "chain(0)", "chain(1)", "chain(3)", "loop"}) {
    try {
      out.push_back(e.system.parse_state(name));
    } catch (const Error&) {
    }
  }
  return out;
}

/// Every non-empty subset of {0..4}, two random sets of size <= 8, and {0..stable}.
std::vector<IndexSet> sample_index_sets(Rng& rng, std::size_t stable) {
  std::vector<IndexSet> out;
  for (std::size_t mask = 1; mask < 32; ++mask) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < 5; ++i) {
      if ((mask >> i) & 1U) m.push_back(i);
    }
    out.push_back(IndexSet::of(std::move(m)));
  }
  for (int k = 0; k < 2; ++k) {
    std::vector<std::size_t> m;
    std::size_t size = 1 + rng() % 8;
    for (std::size_t i = 0; i < size; ++i) m.push_back(rng() % 12);
    out.push_back(IndexSet::of(std::move(m)));
  }
  out.push_back(IndexSet::range(0, stable));
  return out;
}

/// Systems for the compactness suites: the Finite corpus plus random systems.
std::vector<TransitionSystem> compactness_pool(const Corpus& corpus, Rng& rng) {
  std::vector<TransitionSystem> pool;
  for (const auto* e : corpus.finite()) pool.push_back(e->system);
  for (int i = 0; i < 40; ++i) pool.emplace_back(random_lts(rng, kAb, 6, 0.25));
  return pool;
}

std::string state_list(const std::vector<bool>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += v[i] ? '1' : '0';
  return out;
}

CheckReport fail(CheckReport r, Witness w) {
  r.verdict = Verdict::kFail;
  r.witness = std::move(w);
  return r;
}

/// Runs a compactness suite: `make` yields (infinite formula, finite-J builder,
/// quantifier) for a trial. all_j: the infinite side equals "every J"; otherwise "some J".
struct CompactnessTrial {
  NodePtr infinite;
  std::function<NodePtr(const IndexSet&)> finite;
  bool all_j;
  NodePtr dual;  // optional: must evaluate to the complement of `infinite`
};

CheckReport run_compactness(const std::string& name, const Corpus& corpus, std::uint64_t seed,
                            std::size_t trials,
                            const std::function<CompactnessTrial(Rng&)>& make) {
  CheckReport r{name, Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  auto pool = compactness_pool(corpus, rng);
  while (r.trials < trials) {
    const TransitionSystem& ts = pool[rng() % pool.size()];
    CompactnessTrial t = make(rng);
    EvalEnvironment env(ts);
    std::vector<bool> lhs = satisfying_set(env, t.infinite);
    std::size_t n = lhs.size();
    std::vector<bool> rhs(n, t.all_j);
    for (const auto& j : sample_index_sets(rng, n)) {
      std::vector<bool> part = satisfying_set(env, t.finite(j));
      for (std::size_t s = 0; s < n; ++s) rhs[s] = t.all_j ? (rhs[s] && part[s]) : (rhs[s] || part[s]);
    }
    std::string system = "random(" + std::to_string(n) + " states): " + to_aut(ts.finite());
    if (lhs != rhs) {
      return fail(r, {system, "", to_string(*t.infinite),
                      "infinite side " + state_list(lhs) + ", finite-J side " + state_list(rhs)});
    }
    if (t.dual) {
      std::vector<bool> dual = satisfying_set(env, t.dual);
      dual.flip();
      if (dual != lhs) {
        return fail(r, {system, "", to_string(*t.dual), "dual does not complement the original"});
      }
    }
    r.trials += n;
  }
  return r;
}

struct PairEnv {
  const CorpusEntry* entry;
  EvalEnvironment env;
};

std::vector<PairEnv> environments(const std::vector<const CorpusEntry*>& systems) {
  std::vector<PairEnv> out;
  out.reserve(systems.size());
  for (const auto* e : systems) out.push_back({e, EvalEnvironment(e->system)});
  return out;
}

Formula power_family(const Action& a) {
  return conj_family(power(a, top<Hml>()), IndexSet::naturals());
}

std::vector<bool> signature(EvalEnvironment& env, ProjectedState p,
                            const std::vector<Formula>& o) {
  std::vector<bool> out;
  out.reserve(o.size());
  for (const auto& phi : o) out.push_back(satisfies(env, p, phi));
  return out;
}

/// Index of the first formula on which two signatures differ, restricted to `mask`.
std::optional<std::size_t> first_difference(const std::vector<bool>& x, const std::vector<bool>& y,
                                            const std::vector<bool>& mask) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mask[i] && x[i] != y[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

// Checks ---------------------------------------------------------------------

CheckReport check_counterexample_reproduction(std::size_t max_index) {
  CheckReport r{"counterexample_reproduction", Verdict::kPass, 0, 0, std::nullopt, ""};
  auto [left, right] = counterexample_pair();
  CorpusEntry le{"@left-counterexample", left};
  CorpusEntry re{"@right-counterexample", right};
  EvalEnvironment lenv(left), renv(right);
  Formula inf = diamond("a", power_family("a"));
  ++r.trials;
  if (satisfies(lenv, left.root(), inf)) {
    return fail(r, {where(le, {left.root()}), "", to_string(inf), "left root satisfies it"});
  }
  ++r.trials;
  if (!satisfies(renv, right.root(), inf)) {
    return fail(r, {where(re, {right.root()}), "", to_string(inf), "right root fails it"});
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << (max_index + 1)); ++mask) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i <= max_index; ++i) {
      if ((mask >> i) & 1U) m.push_back(i);
    }
    Formula fin =
        diamond("a", conj_family(power("a", top<Hml>()), IndexSet::of(std::move(m))));
    r.trials += 2;
    if (!satisfies(lenv, left.root(), fin)) {
      return fail(r, {where(le, {left.root()}), "", to_string(fin), "left root fails a finite J"});
    }
    if (!satisfies(renv, right.root(), fin)) {
      return fail(r, {where(re, {right.root()}), "", to_string(fin), "right root fails a finite J"});
    }
  }
  r.witness = Witness{where(le, {left.root()}), where(re, {right.root()}), to_string(inf),
                      "left fails and right satisfies the infinite conjunction; both satisfy "
                      "every finite J of {0.." + std::to_string(max_index) + "}"};
  return r;
}

CheckReport check_conjunction_compactness(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t trials) {
  return run_compactness("conjunction_compactness", corpus, seed, trials, [](Rng& rng) {
    PosContext c = gen::pos_context(rng, kAb, {3, 0.0, false, false});
    PosTemplate tpl = gen::pos_power_template(rng, kAb, 2);
    CompactnessTrial t;
    t.infinite = substitute(c.node(), conj_family(tpl, IndexSet::naturals()).ptr());
    t.finite = [c, tpl](const IndexSet& j) {
      return substitute(c.node(), conj_family(tpl, j).ptr());
    };
    t.all_j = true;
    return t;
  });
}

CheckReport check_disjunction_compactness(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t trials) {
  return run_compactness("disjunction_compactness", corpus, seed, trials, [](Rng& rng) {
    PosContext c = gen::pos_context(rng, kAb, {3, 0.0, false, false});
    PosTemplate tpl = gen::pos_power_template(rng, kAb, 2);
    if (std::bernoulli_distribution(0.5)(rng)) tpl = complement(tpl);
    CompactnessTrial t;
    t.infinite = substitute(c.node(), disj_family(tpl, IndexSet::naturals()).ptr());
    t.finite = [c, tpl](const IndexSet& j) {
      return substitute(c.node(), disj_family(tpl, j).ptr());
    };
    t.all_j = false;
    // complement(C)[AND complement(tpl)] must be the negation of C[OR tpl].
    t.dual = substitute(complement(c).node(),
                        conj_family(complement(tpl), IndexSet::naturals()).ptr());
    return t;
  });
}

CheckReport check_negation_compactness(const Corpus& corpus, std::uint64_t seed,
                                       std::size_t trials) {
  return run_compactness("negation_compactness", corpus, seed, trials, [](Rng& rng) {
    Context d = gen::context(rng, kAb, {3, 0.3, false, false});
    Template tpl = gen::power_template(rng, kAb, 2, 0.3);
    CompactnessTrial t;
    t.infinite = substitute(d.node(), conj_family(tpl, IndexSet::naturals()).ptr());
    t.finite = [d, tpl](const IndexSet& j) {
      return substitute(d.node(), conj_family(tpl, j).ptr());
    };
    t.all_j = context_polarity(d) == Polarity::kPositive;
    return t;
  });
}

OSpec power_family_o(const Alphabet& alphabet) {
  OSpec o{"power-family", {}, true};
  for (const auto& a : alphabet) {
    Formula g = power_family(a);
    o.generators.push_back(g);
    o.generators.push_back(neg(g));
    for (const auto& b : alphabet) o.generators.push_back(diamond(b, g));
  }
  return o;
}

CheckReport check_thm_hml(const OSpec& o, const std::vector<const CorpusEntry*>& systems,
                          LambdaMode mode, std::size_t index_bound) {
  std::string suffix = mode == LambdaMode::kFin ? "fin" : "fdp";
  CheckReport r{"thm_hml_" + suffix + "/" + o.name, Verdict::kPass, 0, 0, std::nullopt, ""};

  std::vector<Formula> members = o.generators;
  if (o.closed) {
    for (const auto& g : o.generators) {
      for (const auto& addr : infinite_families(g.node(), false)) {
        for (auto& f : finite_subconjunctions(g, addr, index_bound)) members.push_back(f);
      }
    }
  }
  // O_FIN keeps the members without infinite conjunctions, O_FDP those of finite depth.
  std::vector<bool> all(members.size(), true), sub(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    sub[i] = mode == LambdaMode::kFin ? lambda_measure(members[i], LambdaMode::kFin) == 0
                                      : depth(members[i]) != kInfinite;
  }

  bool image_finite = std::all_of(systems.begin(), systems.end(),
                                  [](const CorpusEntry* e) { return e->system.is_finite(); });
  auto envs = environments(systems);
  std::vector<std::vector<bool>> sigs;
  for (auto& pe : envs) sigs.push_back(signature(pe.env, {pe.entry->system.root()}, members));

  std::optional<Witness> divergence;
  for (std::size_t i = 0; i < envs.size() && !divergence; ++i) {
    for (std::size_t j = i + 1; j < envs.size(); ++j) {
      ++r.trials;
      auto by_o = first_difference(sigs[i], sigs[j], all);
      auto by_sub = first_difference(sigs[i], sigs[j], sub);
      if (by_o.has_value() != by_sub.has_value()) {
        divergence = Witness{where(*envs[i].entry, {envs[i].entry->system.root()}),
                             where(*envs[j].entry, {envs[j].entry->system.root()}),
                             to_string(members[by_o.value_or(0)]),
                             by_o ? "O distinguishes, O_" + suffix + " does not"
                                  : "O_" + suffix + " distinguishes, O does not"};
        break;
      }
    }
  }
  if (!o.closed || !image_finite) {
    r.verdict = Verdict::kVacuous;
    r.note = !o.closed ? "O is not closed under finite sub-conjunctions"
                       : "a system is not image-finite";
    r.witness = divergence;
    return r;
  }
  if (divergence) return fail(r, *divergence);
  return r;
}

CheckReport check_thm_hml_controls(std::size_t max_index) {
  CheckReport r{"thm_hml_controls", Verdict::kPass, 0, 0, std::nullopt, ""};
  CorpusEntry loop{"a-loop", a_loop()};
  CorpusEntry dead{"deadlock", deadlock()};
  CorpusEntry left{"@left-counterexample", left_counterexample()};
  CorpusEntry right{"@right-counterexample", right_counterexample()};

  OSpec single{"single-power-family", {power_family("a")}, false};
  CheckReport unclosed = check_thm_hml(single, {&loop, &dead}, LambdaMode::kFin, max_index);
  OSpec fan{"diamond-power-family", {diamond("a", power_family("a"))}, true};
  CheckReport fixture = check_thm_hml(fan, {&left, &right}, LambdaMode::kFin, max_index);
  r.trials = unclosed.trials + fixture.trials;

  auto diverges = [](const CheckReport& c) {
    return c.verdict == Verdict::kVacuous && c.witness &&
           c.witness->detail.rfind("O distinguishes", 0) == 0;
  };
  if (!diverges(unclosed)) {
    return fail(r, {"a-loop", "deadlock", "", "unclosed O did not diverge from O_FIN"});
  }
  if (!diverges(fixture)) {
    return fail(r, {"@left-counterexample", "@right-counterexample", "",
                    "fixture pair did not diverge"});
  }
  r.witness = fixture.witness;
  r.note = "unclosed: " + unclosed.witness->to_string() + "; fixture: " +
           fixture.witness->to_string();
  return r;
}

CheckReport check_finite_depth_projection(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t formulas) {
  CheckReport r{"finite_depth_projection", Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  std::vector<const CorpusEntry*> systems;
  for (const auto& e : corpus.entries) systems.push_back(&e);
  auto envs = environments(systems);
  std::optional<Witness> tight;
  for (std::size_t k = 0; k < formulas; ++k) {
    Formula phi = gen::formula(rng, kAb, {4, 0.3, false, true});
    std::size_t d = depth(phi);
    for (auto& pe : envs) {
      for (State s : sample_states(*pe.entry)) {
        ++r.trials;
        bool v = satisfies(pe.env, s, phi);
        for (std::size_t n = 0; n <= d + 3; ++n) {
          ProjectedState p = project(pe.entry->system, s, n);
          bool w = satisfies(pe.env, p, phi);
          if (n >= d && w != v) {
            return fail(r, {where(*pe.entry, {s}), where(*pe.entry, p), to_string(phi),
                            "projection at n >= d disagrees"});
          }
          if (n < d && w != v && !tight) {
            tight = Witness{where(*pe.entry, {s}), where(*pe.entry, p), to_string(phi),
                            "tightness: n = " + std::to_string(n) + " < d = " + std::to_string(d)};
          }
        }
      }
      pe.env.clear_memo();
    }
  }
  if (!tight) {
    r.verdict = Verdict::kFail;
    r.note = "no projection below the formula depth disagreed";
    r.witness = Witness{"corpus", "", "", r.note};
    return r;
  }
  r.witness = tight;
  return r;
}

CheckReport check_cut_lemma(const Corpus& corpus, std::uint64_t seed, std::size_t formulas) {
  CheckReport r{"cut_lemma", Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  std::vector<const CorpusEntry*> systems;
  for (const auto& e : corpus.entries) systems.push_back(&e);
  auto envs = environments(systems);
  for (std::size_t k = 0; k < formulas; ++k) {
    Formula phi = gen::formula(rng, kAb, {4, 0.3, true, true});
    std::vector<Formula> cuts;
    for (std::size_t n = 0; n <= 5; ++n) cuts.push_back(cut(n, phi));
    for (auto& pe : envs) {
      for (State s : sample_states(*pe.entry)) {
        for (std::size_t n = 0; n <= 5; ++n) {
          ++r.trials;
          ProjectedState p = project(pe.entry->system, s, n);
          bool lhs = satisfies(pe.env, p, phi);
          bool rhs = satisfies(pe.env, s, cuts[n]);
          if (lhs != rhs) {
            return fail(r, {where(*pe.entry, p), where(*pe.entry, {s}), to_string(phi),
                            "cut_" + std::to_string(n) + " = " + to_string(cuts[n])});
          }
        }
      }
      pe.env.clear_memo();
    }
  }
  return r;
}

CheckReport check_aip(Semantics sem, const Corpus& corpus, std::size_t n_max) {
  CheckReport r{"aip/" + std::string(semantics_name(sem)), Verdict::kPass, 0, 0, std::nullopt, ""};
  std::size_t bound = n_max == 0 ? 0 : n_max - 1;
  auto envs = environments(corpus.finite());
  std::size_t antecedents = 0;
  for (std::size_t i = 0; i < envs.size(); ++i) {
    for (std::size_t j = i; j < envs.size(); ++j) {
      ++r.trials;
      auto& x = envs[i];
      auto& y = envs[j];
      State s = x.entry->system.root();
      State t = y.entry->system.root();
      EquivResult whole = equivalent(sem, bound, x.env, {s}, y.env, {t});
      bool separated = whole.equivalent;
      for (std::size_t n = n_max + 1; n-- > 0 && !separated;) {
        separated = !equivalent(sem, bound, x.env, project(x.entry->system, s, n), y.env,
                                project(y.entry->system, t, n))
                         .equivalent;
      }
      x.env.clear_memo();
      y.env.clear_memo();
      if (whole.equivalent) ++antecedents;
      if (!separated) {
        return fail(r, {where(*x.entry, {s}), where(*y.entry, {t}), to_string(*whole.witness),
                        "all projections up to " + std::to_string(n_max) +
                            " are equivalent but the states are not"});
      }
    }
  }
  r.note = "bound " + std::to_string(bound) + ", " + std::to_string(antecedents) +
           " equivalent pairs";
  return r;
}

CheckReport check_aip(const std::string& name, const std::vector<Formula>& o,
                      const std::vector<const CorpusEntry*>& systems, std::size_t n_max) {
  CheckReport r{"aip/" + name, Verdict::kPass, 0, 0, std::nullopt, ""};
  bool fdp = std::all_of(o.begin(), o.end(),
                         [](const Formula& f) { return depth(f) != kInfinite; });
  auto envs = environments(systems);
  std::vector<bool> mask(o.size(), true);
  std::optional<Witness> violation;
  for (std::size_t i = 0; i < envs.size() && !violation; ++i) {
    for (std::size_t j = i; j < envs.size(); ++j) {
      ++r.trials;
      State s = envs[i].entry->system.root();
      State t = envs[j].entry->system.root();
      auto whole = first_difference(signature(envs[i].env, {s}, o), signature(envs[j].env, {t}, o),
                                    mask);
      if (!whole) continue;
      bool separated = false;
      for (std::size_t n = 0; n <= n_max && !separated; ++n) {
        separated = first_difference(
                        signature(envs[i].env, project(envs[i].entry->system, s, n), o),
                        signature(envs[j].env, project(envs[j].entry->system, t, n), o), mask)
                        .has_value();
      }
      if (!separated) {
        violation = Witness{where(*envs[i].entry, {s}), where(*envs[j].entry, {t}),
                            to_string(o[*whole]),
                            "projections up to " + std::to_string(n_max) +
                                " are O-equivalent, the states are not"};
        break;
      }
    }
  }
  if (!fdp) {
    r.verdict = Verdict::kVacuous;
    r.note = "O has a member of infinite depth";
    r.witness = violation;
    return r;
  }
  if (violation) return fail(r, *violation);
  return r;
}

CheckReport check_aip_non_fdp_control(std::size_t n_max) {
  CorpusEntry loop{"a-loop", a_loop()};
  CorpusEntry dead{"deadlock", deadlock()};
  CheckReport inner = check_aip("power-family", {power_family("a")}, {&loop, &dead}, n_max);
  CheckReport r{"aip_non_fdp_control", Verdict::kPass, inner.trials, 0, inner.witness, ""};
  if (inner.verdict != Verdict::kVacuous || !inner.witness) {
    r.verdict = Verdict::kFail;
    r.witness = Witness{"a-loop", "deadlock", "", "no AIP violation found for the non-FDP O"};
  }
  return r;
}

CheckReport check_necessity(Semantics sem, const Corpus& corpus, std::size_t n_max) {
  CheckReport r{"necessity/" + std::string(semantics_name(sem)), Verdict::kPass, 0, 0,
                std::nullopt, ""};
  std::size_t bound = n_max;
  auto envs = environments(corpus.finite());

  // Compositionality probe.
  std::size_t probes = 0;
  for (std::size_t i = 0; i < envs.size(); ++i) {
    for (std::size_t j = i + 1; j < envs.size(); ++j) {
      ++probes;
      auto& x = envs[i];
      auto& y = envs[j];
      State s = x.entry->system.root();
      State t = y.entry->system.root();
      bool same = equivalent(sem, bound, x.env, {s}, y.env, {t}).equivalent;
      for (std::size_t n = 0; same && n <= n_max; ++n) {
        ProjectedState ps = project(x.entry->system, s, n);
        ProjectedState pt = project(y.entry->system, t, n);
        EquivResult e = equivalent(sem, bound, x.env, ps, y.env, pt);
        if (!e.equivalent) {
          x.env.clear_memo();
          y.env.clear_memo();
          r.verdict = Verdict::kVacuous;
          r.trials = probes;
          r.note = "not compositional with respect to projection";
          r.witness = Witness{where(*x.entry, {s}), where(*y.entry, {t}), to_string(*e.witness),
                              "equivalent, but " + where(*x.entry, ps) + " and " +
                                  where(*y.entry, pt) + " are not"};
          return r;
        }
      }
      x.env.clear_memo();
      y.env.clear_memo();
    }
  }

  for (std::size_t i = 0; i < envs.size(); ++i) {
    for (std::size_t j = i; j < envs.size(); ++j) {
      ++r.trials;
      auto& x = envs[i];
      auto& y = envs[j];
      State s = x.entry->system.root();
      State t = y.entry->system.root();
      Alphabet alphabet = merge_alphabets(x.entry->system.alphabet(), y.entry->system.alphabet());
      CharacterizationSet o =
          char_formulas_for(sem, alphabet, bound, {{&x.entry->system, {s}}, {&y.entry->system, {t}}});
      bool by_o = equiv_modulo(x.env, {s}, y.env, {t}, o).equivalent;
      bool by_o1 = true;
      std::string separator;
      for (std::size_t n = n_max + 1; n-- > 0 && by_o1;) {
        for (const auto& phi : o.formulas) {
          Formula c = cut(n, phi);
          if (satisfies(x.env, s, c) != satisfies(y.env, t, c)) {
            by_o1 = false;
            separator = to_string(c);
            break;
          }
        }
      }
      x.env.clear_memo();
      y.env.clear_memo();
      if (by_o != by_o1) {
        return fail(r, {where(*x.entry, {s}), where(*y.entry, {t}), separator,
                        by_o ? "O_1 separates O-equivalent states" : "O separates, O_1 does not"});
      }
    }
  }
  return r;
}

CheckReport check_reachability_soundness(const Corpus& corpus, std::size_t n_max) {
  CheckReport r{"reachability_soundness", Verdict::kPass, 0, 0, std::nullopt, ""};
  auto systems = corpus.finite();
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i; j < systems.size(); ++j) {
      ++r.trials;
      const auto& x = *systems[i];
      const auto& y = *systems[j];
      Alphabet alphabet = merge_alphabets(x.system.alphabet(), y.system.alphabet());
      std::size_t bx = x.system.finite().state_count();
      std::size_t by = y.system.finite().state_count();
      auto agree = [&](ProjectedState s, std::size_t ks, ProjectedState t, std::size_t kt) {
        for (const auto& a : alphabet) {
          if (reachable_action(x.system, s, a, ks) != reachable_action(y.system, t, a, kt)) {
            return false;
          }
        }
        return true;
      };
      ProjectedState s{x.system.root()}, t{y.system.root()};
      if (agree(s, bx, t, by)) continue;
      bool separated = false;
      for (std::size_t n = 0; n <= n_max && !separated; ++n) {
        separated = !agree(project(x.system, s.base, n), n, project(y.system, t.base, n), n);
      }
      if (!separated) {
        return fail(r, {where(x, s), where(y, t), "", "projections agree on reachability"});
      }
    }
  }
  return r;
}

CheckReport check_translation_coherence(const Corpus& corpus, std::uint64_t seed,
                                        std::size_t formulas) {
  CheckReport r{"translation_coherence", Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  auto systems = corpus.finite();
  for (std::size_t k = 0; k < formulas; ++k) {
    Formula phi = gen::formula(rng, kAb, {3, 0.3, false, true});
    PosFormula p = to_positive(phi);
    PosFormula pbar = complement(p);
    if (!structurally_equal(complement(pbar).node(), p.node())) {
      return fail(r, {"", "", to_string(p), "complement is not an involution"});
    }
    for (const auto* e : systems) {
      r.trials += e->system.finite().state_count();
      EvalEnvironment env(e->system);
      std::vector<bool> direct = satisfying_set(env, phi);
      std::vector<bool> positive = satisfying_set(env, p);
      std::vector<bool> negated = satisfying_set(env, pbar);
      negated.flip();
      if (direct != positive) {
        return fail(r, {e->name, "", to_string(phi),
                        "P(phi) = " + to_string(p) + " holds at " + state_list(positive) +
                            ", phi at " + state_list(direct)});
      }
      if (negated != positive) {
        return fail(r, {e->name, "", to_string(pbar), "complement is not the negation"});
      }
    }
  }
  return r;
}

CheckReport check_context_lemma(std::uint64_t seed, std::size_t trials) {
  CheckReport r{"context_lemma", Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  for (; r.trials < trials; ++r.trials) {
    Context d = gen::context(rng, kAb, {3, 0.3, false, false});
    Formula phi = gen::formula(rng, kAb, {3, 0.3, false, false});
    TranslatedContext tc = translate_context(d);
    PosFormula arg = to_positive(phi);
    if (tc.polarity == Polarity::kNegative) arg = complement(arg);
    PosFormula lhs = to_positive(substitute(d, phi));
    PosFormula rhs = substitute(tc.context, arg);
    if (!(lhs == rhs)) {
      return fail(r, {"", "", to_string(substitute(d, phi)),
                      "context " + to_string(d) + ": " + to_string(lhs) + " vs " + to_string(rhs)});
    }
  }
  return r;
}

CheckReport check_hennessy_milner(const Corpus& corpus, std::uint64_t seed,
                                  std::size_t random_pairs) {
  CheckReport r{"hennessy_milner", Verdict::kPass, 0, seed, std::nullopt, ""};
  auto compare = [&](const CorpusEntry& x, EvalEnvironment& ex, const CorpusEntry& y,
                     EvalEnvironment& ey) -> std::optional<Witness> {
    const FiniteLts& lx = x.system.finite();
    const FiniteLts& ly = y.system.finite();
    std::size_t bound = lx.state_count() + ly.state_count();
    EquivResult by_formulas =
        equivalent(Semantics::kBisimulation, bound, ex, {lx.root()}, ey, {ly.root()});
    bool by_refinement = bisimilar(lx, lx.root(), ly, ly.root());
    ex.clear_memo();
    ey.clear_memo();
    if (by_formulas.equivalent == by_refinement) return std::nullopt;
    return Witness{where(x, {lx.root()}), where(y, {ly.root()}),
                   by_formulas.witness ? to_string(*by_formulas.witness) : "",
                   by_refinement ? "bisimilar but distinguished" : "not bisimilar, not distinguished"};
  };
  auto envs = environments(corpus.finite());
  for (std::size_t i = 0; i < envs.size(); ++i) {
    for (std::size_t j = i; j < envs.size(); ++j) {
      ++r.trials;
      if (auto w = compare(*envs[i].entry, envs[i].env, *envs[j].entry, envs[j].env)) {
        return fail(r, *w);
      }
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < random_pairs; ++k) {
    ++r.trials;
    CorpusEntry x{"random", random_lts(rng, kAb, 6, 0.25)};
    CorpusEntry y{"random", random_lts(rng, kAb, 6, 0.25)};
    x.name += "[" + to_aut(x.system.finite()) + "]";
    y.name += "[" + to_aut(y.system.finite()) + "]";
    EvalEnvironment ex(x.system), ey(y.system);
    if (auto w = compare(x, ex, y, ey)) return fail(r, *w);
  }
  return r;
}

namespace {

std::vector<std::pair<CorpusEntry, CorpusEntry>> random_term_pairs(Rng& rng, std::size_t count) {
  std::vector<std::pair<CorpusEntry, CorpusEntry>> out;
  for (std::size_t k = 0; k < count; ++k) {
    ProcessTerm p = random_term(rng, kAb, 5);
    ProcessTerm q = random_term(rng, kAb, 5);
    out.emplace_back(CorpusEntry{to_string(p), from_term(p)}, CorpusEntry{to_string(q), from_term(q)});
  }
  return out;
}

template <class Visit>
void corpus_and_random_pairs(const Corpus& corpus, Rng& rng, std::size_t random_pairs,
                             Visit&& visit) {
  auto systems = corpus.finite();
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i; j < systems.size(); ++j) {
      if (!visit(*systems[i], *systems[j])) return;
    }
  }
  for (const auto& [x, y] : random_term_pairs(rng, random_pairs)) {
    if (!visit(x, y)) return;
  }
}

}  // namespace

CheckReport check_spectrum_agreement(const Corpus& corpus, std::uint64_t seed,
                                     std::size_t random_pairs) {
  CheckReport r{"spectrum_agreement", Verdict::kPass, 0, seed, std::nullopt, ""};
  Rng rng(seed);
  corpus_and_random_pairs(corpus, rng, random_pairs, [&](const CorpusEntry& x, const CorpusEntry& y) {
    EvalEnvironment ex(x.system), ey(y.system);
    State s = x.system.root();
    State t = y.system.root();
    std::size_t nx = x.system.finite().state_count();
    std::size_t ny = y.system.finite().state_count();
    for (Semantics sem : supported_semantics()) {
      ++r.trials;
      std::size_t bound = default_bound(sem, nx, ny);
      EquivResult f = equivalent(sem, bound, ex, {s}, ey, {t});
      bool d = decide(sem, bound, x.system, {s}, y.system, {t});
      ex.clear_memo();
      ey.clear_memo();
      if (f.equivalent != d) {
        r = fail(r, {where(x, {s}), where(y, {t}), f.witness ? to_string(*f.witness) : "",
                     std::string(semantics_name(sem)) + ": decider says " +
                         (d ? "equivalent" : "different")});
        return false;
      }
    }
    return true;
  });
  return r;
}

CheckReport check_spectrum_inclusions(const Corpus& corpus, std::uint64_t seed,
                                      std::size_t random_pairs) {
  CheckReport r{"spectrum_inclusions", Verdict::kPass, 0, seed, std::nullopt, ""};
  const std::vector<Semantics> chain{Semantics::kBisimulation, Semantics::kReadySimulation,
                                     Semantics::kReadiness,    Semantics::kFailures,
                                     Semantics::kCompletedTrace, Semantics::kTrace};
  Rng rng(seed);
  corpus_and_random_pairs(corpus, rng, random_pairs, [&](const CorpusEntry& x, const CorpusEntry& y) {
    ++r.trials;
    std::size_t bound = x.system.finite().state_count() * y.system.finite().state_count();
    bool finer = false;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      bool v = decide(chain[k], bound, x.system, {x.system.root()}, y.system, {y.system.root()});
      if (finer && !v) {
        r = fail(r, {where(x, {x.system.root()}), where(y, {y.system.root()}), "",
                     std::string(semantics_name(chain[k - 1])) + " does not imply " +
                         std::string(semantics_name(chain[k]))});
        return false;
      }
      finer = v;
    }
    return true;
  });
  return r;
}

std::vector<CheckReport> run_all(std::uint64_t seed) {
  Corpus corpus = standard_corpus();
  std::size_t n_max = 2 * corpus.max_states();
  std::size_t index_bound = corpus.max_states();
  std::vector<CheckReport> out;
  out.push_back(check_counterexample_reproduction());
  out.push_back(check_conjunction_compactness(corpus, seed));
  out.push_back(check_disjunction_compactness(corpus, seed + 1));
  out.push_back(check_negation_compactness(corpus, seed + 2));
  OSpec o = power_family_o(kAb);
  out.push_back(check_thm_hml(o, corpus.finite(), LambdaMode::kFin, index_bound));
  out.push_back(check_thm_hml(o, corpus.finite(), LambdaMode::kFdp, index_bound));
  out.push_back(check_thm_hml_controls());
  out.push_back(check_hennessy_milner(corpus, seed + 3));
  out.push_back(check_finite_depth_projection(corpus, seed + 4));
  out.push_back(check_cut_lemma(corpus, seed + 5));
  for (Semantics sem : {Semantics::kTrace, Semantics::kCompletedTrace, Semantics::kFailures,
                        Semantics::kReadiness, Semantics::kSimulation,
                        Semantics::kReadySimulation, Semantics::kBisimulation}) {
    out.push_back(check_aip(sem, corpus, n_max));
  }
  out.push_back(check_aip_non_fdp_control(n_max));
  for (Semantics sem :
       {Semantics::kBisimulation, Semantics::kTrace, Semantics::kReachabilityExample}) {
    out.push_back(check_necessity(sem, corpus, n_max));
  }
  out.push_back(check_reachability_soundness(corpus, n_max));
  out.push_back(check_translation_coherence(corpus, seed + 6));
  out.push_back(check_context_lemma(seed + 7));
  out.push_back(check_spectrum_agreement(corpus, seed + 8));
  out.push_back(check_spectrum_inclusions(corpus, seed + 9));
  return out;
}

}  // namespace hml
