#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hml/eval.hpp"
#include "hml/formula_io.hpp"
#include "hml/harness.hpp"
#include "hml/lts.hpp"
#include "hml/spectrum.hpp"

namespace hml::cli {

namespace {

/// Input rejected before any computation.
class InputError : public Error {
 public:
  using Error::Error;
};

TransitionSystem load_system(const std::string& spec) {
  if (spec == "@left-counterexample") return left_counterexample();
  if (spec == "@right-counterexample") return right_counterexample();
  if (!spec.empty() && spec.front() == '@') {
    throw InputError("unknown reserved system '" + spec +
                     "' (known: @left-counterexample, @right-counterexample)");
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open '" + spec + "'");
  try {
    return read_aut(in);
  } catch (const ParseError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

State load_state(const TransitionSystem& ts, const std::optional<std::string>& text) {
  if (!text) return ts.root();
  try {
    return ts.parse_state(*text);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::variant<Formula, PosFormula> load_formula(const std::string& text) {
  try {
    return parse_any_formula(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("formula: ") + e.what());
  }
}

std::string catalogue() {
  std::string out;
  for (Semantics s : all_semantics()) {
    if (!out.empty()) out += ", ";
    out += semantics_name(s);
    if (!is_supported(s)) out += " (unsupported)";
  }
  return out;
}

Semantics load_semantics(const std::string& name) {
  auto sem = parse_semantics(name);
  if (!sem) throw InputError("unknown semantics '" + name + "'; known: " + catalogue());
  if (!is_supported(*sem)) {
    throw InputError("semantics '" + name + "' has no generator; known: " + catalogue());
  }
  return *sem;
}

void require_finite(const TransitionSystem& ts, const std::string& what) {
  if (!ts.is_finite()) throw InputError(what + " needs a finite system");
}

struct PairArgs {
  std::string lts1, lts2;
  std::optional<std::size_t> bound;
};

std::size_t pair_bound(Semantics sem, const PairArgs& p, const TransitionSystem& a,
                       const TransitionSystem& b) {
  return p.bound.value_or(
      default_bound(sem, a.finite().state_count(), b.finite().state_count()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hennessy-Milner logic workbench", "hmlc"};
  app.require_subcommand(1);

  std::string lts, formula_text, semantics;
  std::optional<std::string> state;
  std::size_t n = 0;
  std::uint64_t seed = 42;
  bool json = false;
  PairArgs pair;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula at a state");
  eval_cmd->add_option("--lts", lts, ".aut file or reserved @name")->required();
  eval_cmd->add_option("--state", state, "State (default: the root)");
  eval_cmd->add_option("--formula", formula_text, "Formula text")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two roots modulo a characterization");
  equiv_cmd->add_option("--lts1", pair.lts1)->required();
  equiv_cmd->add_option("--lts2", pair.lts2)->required();
  equiv_cmd->add_option("--semantics", semantics)->required();
  equiv_cmd->add_option("--bound", pair.bound, "Depth bound (default: from the state counts)");

  auto* project_cmd = app.add_subcommand("project", "Print the reachable projected system");
  project_cmd->add_option("--lts", lts)->required();
  project_cmd->add_option("--state", state);
  project_cmd->add_option("--n", n)->required();

  auto* cut_cmd = app.add_subcommand("cut", "Print cut_n of a formula");
  cut_cmd->add_option("--n", n)->required();
  cut_cmd->add_option("--formula", formula_text)->required();

  auto* report_cmd = app.add_subcommand("spectrum-report", "Verdicts of every semantics on a pair");
  report_cmd->add_option("--lts1", pair.lts1)->required();
  report_cmd->add_option("--lts2", pair.lts2)->required();
  report_cmd->add_option("--bound", pair.bound);

  auto* check_cmd = app.add_subcommand("check-all", "Run every harness check");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_flag("--json", json, "Dump the reports as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (*eval_cmd) {
      TransitionSystem ts = load_system(lts);
      State s = load_state(ts, state);
      auto phi = load_formula(formula_text);
      EvalEnvironment env(ts);
      bool v = std::visit([&](const auto& f) { return satisfies(env, s, f); }, phi);
      out << (v ? "true" : "false") << '\n';
      return v ? kTrue : kFalse;
    }
    if (*equiv_cmd) {
      Semantics sem = load_semantics(semantics);
      TransitionSystem a = load_system(pair.lts1);
      TransitionSystem b = load_system(pair.lts2);
      require_finite(a, "equiv");
      require_finite(b, "equiv");
      std::size_t bound = pair_bound(sem, pair, a, b);
      EvalEnvironment ea(a), eb(b);
      EquivResult r = equivalent(sem, bound, ea, {a.root()}, eb, {b.root()});
      if (r.equivalent) {
        out << "equivalent (" << semantics_name(sem) << ", bound " << bound << ")\n";
        return kTrue;
      }
      out << "distinguished (" << semantics_name(sem) << ", bound " << bound << ")\n"
          << "witness: " << to_string(*r.witness) << '\n'
          << "holds on: " << (r.left_satisfies ? "lts1" : "lts2") << '\n';
      return kFalse;
    }
    if (*project_cmd) {
      TransitionSystem ts = load_system(lts);
      require_finite(ts, "project");
      State s = load_state(ts, state);
      MaterializedProjection m = materialize(ts, project(ts, s, n));
      write_aut(out, m.lts);
      for (std::size_t i = 0; i < m.origin.size(); ++i) {
        out << "# " << i << " = pi_" << m.origin[i].budget << "(" << ts.describe(m.origin[i].base)
            << ")\n";
      }
      return kTrue;
    }
    if (*cut_cmd) {
      auto phi = load_formula(formula_text);
      std::visit([&](const auto& f) { out << to_string(cut(n, f)) << '\n'; }, phi);
      return kTrue;
    }
    if (*report_cmd) {
      TransitionSystem a = load_system(pair.lts1);
      TransitionSystem b = load_system(pair.lts2);
      require_finite(a, "spectrum-report");
      require_finite(b, "spectrum-report");
      EvalEnvironment ea(a), eb(b);
      out << std::left << std::setw(22) << "semantics" << std::setw(8) << "bound"
          << std::setw(16) << "formulas" << "decider\n";
      for (Semantics sem : all_semantics()) {
        out << std::setw(22) << semantics_name(sem);
        if (!is_supported(sem)) {
          out << std::setw(8) << "-" << std::setw(16) << "unsupported" << "unsupported\n";
          continue;
        }
        std::size_t bound = pair_bound(sem, pair, a, b);
        bool f = equivalent(sem, bound, ea, {a.root()}, eb, {b.root()}).equivalent;
        bool d = decide(sem, bound, a, {a.root()}, b, {b.root()});
        ea.clear_memo();
        eb.clear_memo();
        out << std::setw(8) << bound << std::setw(16) << (f ? "equivalent" : "distinguished")
            << (d ? "equivalent" : "distinguished") << '\n';
      }
      return kTrue;
    }
    if (*check_cmd) {
      std::vector<CheckReport> reports = run_all(seed);
      if (json) {
        out << reports_to_json(reports) << '\n';
      } else {
        for (const auto& r : reports) out << format_line(r) << '\n';
      }
      bool failed = std::any_of(reports.begin(), reports.end(),
                                [](const CheckReport& r) { return r.verdict == Verdict::kFail; });
      return failed ? kFalse : kTrue;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hml::cli
