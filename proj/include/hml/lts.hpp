#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hml/action.hpp"

namespace hml {

using State = std::size_t;

struct Transition {
  State from;
  Action action;
  State to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Explicit finite LTS with dense state ids 0..state_count()-1.
class FiniteLts {
 public:
  FiniteLts() : FiniteLts(1, {}, 0) {}

  /// `extra_actions` are added to the alphabet even if no transition uses them.
  FiniteLts(std::size_t state_count, std::vector<Transition> transitions, State root,
            std::vector<Action> extra_actions = {});

  std::size_t state_count() const { return state_count_; }
  State root() const { return root_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  bool contains(State s) const { return s < state_count_; }

  /// All a-successors, in insertion order. Empty for actions outside the alphabet.
  const std::vector<State>& successors(State s, const Action& a) const;

  /// Actions with at least one outgoing transition from `s`, sorted.
  std::vector<Action> enabled(State s) const;

  FiniteLts with_root(State root) const;

 private:
  std::size_t action_index(const Action& a) const;

  std::size_t state_count_ = 0;
  State root_ = 0;
  Alphabet alphabet_;
  std::vector<Transition> transitions_;
  // adjacency_[state][action index] -> successors
  std::vector<std::vector<std::vector<State>>> adjacency_;
};

/// Rule-based, possibly infinitely branching system. The successor function
/// returns a finite representative set: for every formula of depth <= budget
/// some successor satisfies it iff some representative does. The oracle
/// reports whether an infinite a-path starts in a state; representatives
/// must also be faithful for that predicate.
class FamilyLts {
 public:
  using SuccessorFn = std::function<std::vector<State>(State, const Action&, std::size_t budget)>;
  using PredicateFn = std::function<bool(State)>;
  using DescribeFn = std::function<std::string(State)>;
  using ParseFn = std::function<std::optional<State>(const std::string&)>;

  FamilyLts(std::string name, Alphabet alphabet, State root, Action path_action,
            SuccessorFn successors, PredicateFn infinite_path, PredicateFn contains,
            DescribeFn describe, ParseFn parse);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  State root() const { return root_; }
  const Action& path_action() const { return path_action_; }
  bool contains(State s) const { return contains_(s); }
  std::vector<State> successors(State s, const Action& a, std::size_t budget) const;
  bool infinite_path(State s) const { return infinite_path_(s); }
  std::string describe(State s) const { return describe_(s); }
  std::optional<State> parse_state(const std::string& text) const { return parse_(text); }

 private:
  std::string name_;
  Alphabet alphabet_;
  State root_;
  Action path_action_;
  SuccessorFn successors_;
  PredicateFn infinite_path_;
  PredicateFn contains_;
  DescribeFn describe_;
  ParseFn parse_;
};

enum class SystemKind { kFinite, kFamily };

class TransitionSystem {
 public:
  TransitionSystem(FiniteLts lts) : impl_(std::move(lts)) {}  // NOLINT(implicit)
  TransitionSystem(FamilyLts lts) : impl_(std::move(lts)) {}  // NOLINT(implicit)

  SystemKind kind() const;
  bool is_finite() const { return kind() == SystemKind::kFinite; }
  const FiniteLts& finite() const;
  const FamilyLts& family() const;

  State root() const;
  const Alphabet& alphabet() const;
  bool contains(State s) const;

  /// Finite: every a-successor, budget ignored. Family: representatives for `depth_budget`.
  /// Throws Error for unknown states.
  std::vector<State> successors(State s, const Action& a, std::size_t depth_budget) const;

  /// Only Family systems carry the infinite-path oracle.
  std::optional<bool> infinite_path(State s, const Action& a) const;

  std::string describe(State s) const;
  /// Accepts numeric ids and, for Family systems, descriptors such as `chain(3)`.
  State parse_state(const std::string& text) const;

 private:
  std::variant<FiniteLts, FamilyLts> impl_;
};

/// A state under the projection operator. `budget == kInfinite` is the
/// unprojected state itself.
struct ProjectedState {
  State base = 0;
  std::size_t budget = kInfinite;

  bool is_projected() const { return budget != kInfinite; }
  friend bool operator==(const ProjectedState&, const ProjectedState&) = default;
  friend auto operator<=>(const ProjectedState&, const ProjectedState&) = default;
};

/// pi_n(s). Throws Error for unknown states.
ProjectedState project(const TransitionSystem& ts, State s, std::size_t n);

/// Transitions licensed by the projection rule: none from budget 0, each step
/// lowers the budget by one.
std::vector<ProjectedState> successors(const TransitionSystem& ts, ProjectedState p,
                                       const Action& a, std::size_t depth_budget);

std::vector<Action> enabled(const TransitionSystem& ts, ProjectedState p);

struct MaterializedProjection {
  FiniteLts lts;                       // root is state 0
  std::vector<ProjectedState> origin;  // origin[i] is the projected state numbered i
};

/// Reachable part of the projected system, numbered breadth-first. Finite systems only.
MaterializedProjection materialize(const TransitionSystem& ts, ProjectedState p);

// Fixtures ------------------------------------------------------------------

/// The pair of non-image-finite systems: a root with one a-edge to the head of
/// an a-chain of every length n (left) and the same plus an a-edge into an
/// infinite a-path (right). States: root, chain(n), loop.
std::pair<TransitionSystem, TransitionSystem> counterexample_pair();
TransitionSystem left_counterexample();
TransitionSystem right_counterexample();

/// One state with an a-self-loop.
FiniteLts a_loop(const Action& a = "a");
/// One state, no transitions.
FiniteLts deadlock();

// Aldebaran .aut ------------------------------------------------------------

FiniteLts read_aut(std::istream& in);
FiniteLts parse_aut(const std::string& text);
void write_aut(std::ostream& out, const FiniteLts& lts);
std::string to_aut(const FiniteLts& lts);

}  // namespace hml
