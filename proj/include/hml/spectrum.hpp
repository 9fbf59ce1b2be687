#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hml/eval.hpp"
#include "hml/formula.hpp"
#include "hml/lts.hpp"

namespace hml {

enum class Semantics {
  kTrace,
  kCompletedTrace,
  kFailures,
  kReadiness,
  kSimulation,
  kReadySimulation,
  kBisimulation,
  kReachabilityExample,
  // Catalogued without a generator.
  kFailureTrace,
  kReadyTrace,
  kNestedSimulation,
};

/// Requested semantics has no generator or decider.
class UnsupportedSemantics : public Error {
 public:
  using Error::Error;
};

/// Lower-case, dash-separated: "trace", "completed-trace", ..., "reachability-example".
std::string_view semantics_name(Semantics sem);
std::optional<Semantics> parse_semantics(std::string_view name);
/// Every catalogued semantics, supported ones first.
const std::vector<Semantics>& all_semantics();
/// The eight semantics with a generator and a decider.
const std::vector<Semantics>& supported_semantics();
bool is_supported(Semantics sem);

/// Default bound for a pair of systems with n1 and n2 states: n1 + n2 for
/// bisimulation, n1 * n2 otherwise.
std::size_t default_bound(Semantics sem, std::size_t n1, std::size_t n2);

struct CharacterizationSet {
  Semantics semantics;
  Alphabet alphabet;
  std::size_t depth_bound;
  std::vector<Formula> formulas;
};

/// A state of some system, possibly projected.
struct Probe {
  const TransitionSystem* system;
  ProjectedState point;
};

/// The characterization up to `bound`, independent of any system, in
/// canonical order (depth, negations, size, text) without duplicates.
/// Decorated-trace families decorate traces of length <= bound. Throws
/// std::length_error once more than `cap` formulas would be produced.
CharacterizationSet char_formulas(Semantics sem, const Alphabet& alphabet, std::size_t bound,
                                  std::size_t cap = 200000);

/// A finite O' for the given probes that induces the same equivalence on
/// them as char_formulas(sem, alphabet, bound). Trace families: the members
/// satisfied by some probe. Simulation and bisimulation families: a
/// decorated-trace layer of depth <= min(bound, 4) followed by the
/// characteristic formula of every probe. Finite systems only.
CharacterizationSet char_formulas_for(Semantics sem, const Alphabet& alphabet, std::size_t bound,
                                      const std::vector<Probe>& probes,
                                      std::size_t cap = 200000);

struct EquivResult {
  bool equivalent = true;
  std::optional<Formula> witness;  // first member of O on which the two sides differ
  bool left_satisfies = false;     // truth of the witness on the left side
};

EquivResult equiv_modulo(EvalEnvironment& env_s, ProjectedState s, EvalEnvironment& env_t,
                         ProjectedState t, const std::vector<Formula>& formulas);

inline EquivResult equiv_modulo(EvalEnvironment& env_s, ProjectedState s, EvalEnvironment& env_t,
                                ProjectedState t, const CharacterizationSet& o) {
  return equiv_modulo(env_s, s, env_t, t, o.formulas);
}

/// equiv_modulo under char_formulas_for over the two points and the merged alphabet.
EquivResult equivalent(Semantics sem, std::size_t bound, EvalEnvironment& env_s, ProjectedState s,
                       EvalEnvironment& env_t, ProjectedState t);

// Direct deciders ----------------------------------------------------------------

using Trace = std::vector<Action>;

bool bisimilar(const FiniteLts& l1, State s, const FiniteLts& l2, State t);

/// t simulates s. With `ready`, related states must also enable the same actions.
bool simulated_by(const FiniteLts& l1, State s, const FiniteLts& l2, State t, bool ready = false);

std::set<Trace> trace_sets(const FiniteLts& lts, State s, std::size_t bound);
std::set<Trace> completed_traces(const FiniteLts& lts, State s, std::size_t bound);
/// Refusal sets range over subsets of `alphabet` (the system's own when empty).
std::set<std::pair<Trace, Alphabet>> failures(const FiniteLts& lts, State s, std::size_t bound,
                                              const Alphabet& alphabet = {});
std::set<std::pair<Trace, Alphabet>> ready_sets(const FiniteLts& lts, State s, std::size_t bound);

/// Some path of length <= bound from p ends in a state enabling a.
bool reachable_action(const TransitionSystem& ts, ProjectedState p, const Action& a,
                      std::size_t bound);

/// The decider's verdict. Projected points are materialized first. Trace
/// families and the reachability example compare up to `bound`; simulation
/// and bisimulation are exact.
bool decide(Semantics sem, std::size_t bound, const TransitionSystem& ts1, ProjectedState s,
            const TransitionSystem& ts2, ProjectedState t);

}  // namespace hml
