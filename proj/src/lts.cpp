#include "hml/lts.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hml {

FiniteLts::FiniteLts(std::size_t state_count, std::vector<Transition> transitions, State root,
                     std::vector<Action> extra_actions)
    : state_count_(state_count), root_(root), transitions_(std::move(transitions)) {
  if (state_count_ == 0) throw Error("a transition system needs at least one state");
  if (root_ >= state_count_) throw Error("root " + std::to_string(root_) + " is not a state");
  std::vector<Action> actions = std::move(extra_actions);
  for (const auto& t : transitions_) {
    if (t.from >= state_count_ || t.to >= state_count_) {
      throw Error("transition (" + std::to_string(t.from) + ", " + t.action + ", " +
                  std::to_string(t.to) + ") has an undeclared endpoint");
    }
    if (t.action.empty()) throw Error("empty action label");
    actions.push_back(t.action);
  }
  alphabet_ = make_alphabet(std::move(actions));
  adjacency_.assign(state_count_, std::vector<std::vector<State>>(alphabet_.size()));
  for (const auto& t : transitions_) {
    adjacency_[t.from][action_index(t.action)].push_back(t.to);
  }
}

std::size_t FiniteLts::action_index(const Action& a) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), a);
  if (it == alphabet_.end() || *it != a) return alphabet_.size();
  return static_cast<std::size_t>(it - alphabet_.begin());
}

const std::vector<State>& FiniteLts::successors(State s, const Action& a) const {
  static const std::vector<State> kNone;
  if (s >= state_count_) throw Error("unknown state " + std::to_string(s));
  std::size_t i = action_index(a);
  if (i == alphabet_.size()) return kNone;
  return adjacency_[s][i];
}

std::vector<Action> FiniteLts::enabled(State s) const {
  if (s >= state_count_) throw Error("unknown state " + std::to_string(s));
  std::vector<Action> out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (!adjacency_[s][i].empty()) out.push_back(alphabet_[i]);
  }
  return out;
}

FiniteLts FiniteLts::with_root(State root) const {
  FiniteLts copy = *this;
  if (root >= state_count_) throw Error("root " + std::to_string(root) + " is not a state");
  copy.root_ = root;
  return copy;
}

FamilyLts::FamilyLts(std::string name, Alphabet alphabet, State root, Action path_action,
                     SuccessorFn successors, PredicateFn infinite_path, PredicateFn contains,
                     DescribeFn describe, ParseFn parse)
    : name_(std::move(name)),
      alphabet_(make_alphabet(std::move(alphabet))),
      root_(root),
      path_action_(std::move(path_action)),
      successors_(std::move(successors)),
      infinite_path_(std::move(infinite_path)),
      contains_(std::move(contains)),
      describe_(std::move(describe)),
      parse_(std::move(parse)) {}

std::vector<State> FamilyLts::successors(State s, const Action& a, std::size_t budget) const {
  if (!contains_(s)) throw Error("unknown state " + std::to_string(s) + " of " + name_);
  return successors_(s, a, budget);
}

SystemKind TransitionSystem::kind() const {
  return std::holds_alternative<FiniteLts>(impl_) ? SystemKind::kFinite : SystemKind::kFamily;
}

const FiniteLts& TransitionSystem::finite() const {
  if (const auto* f = std::get_if<FiniteLts>(&impl_)) return *f;
  throw Error("operation requires a finite transition system");
}

const FamilyLts& TransitionSystem::family() const {
  if (const auto* f = std::get_if<FamilyLts>(&impl_)) return *f;
  throw Error("operation requires a family transition system");
}

State TransitionSystem::root() const {
  return std::visit([](const auto& ts) { return ts.root(); }, impl_);
}

const Alphabet& TransitionSystem::alphabet() const {
  return std::visit([](const auto& ts) -> const Alphabet& { return ts.alphabet(); }, impl_);
}

bool TransitionSystem::contains(State s) const {
  return std::visit([s](const auto& ts) { return ts.contains(s); }, impl_);
}

std::vector<State> TransitionSystem::successors(State s, const Action& a,
                                                std::size_t depth_budget) const {
  if (const auto* f = std::get_if<FiniteLts>(&impl_)) return f->successors(s, a);
  return std::get<FamilyLts>(impl_).successors(s, a, depth_budget);
}

std::optional<bool> TransitionSystem::infinite_path(State s, const Action& a) const {
  const auto* f = std::get_if<FamilyLts>(&impl_);
  if (f == nullptr || a != f->path_action()) return std::nullopt;
  if (!f->contains(s)) throw Error("unknown state " + std::to_string(s));
  return f->infinite_path(s);
}

std::string TransitionSystem::describe(State s) const {
  if (const auto* f = std::get_if<FamilyLts>(&impl_)) return f->describe(s);
  return std::to_string(s);
}

State TransitionSystem::parse_state(const std::string& text) const {
  if (const auto* f = std::get_if<FamilyLts>(&impl_)) {
    if (auto s = f->parse_state(text)) return *s;
  }
  std::size_t used = 0;
  State s = 0;
  try {
    s = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw Error("not a state: '" + text + "'");
  }
  if (used != text.size() || !contains(s)) throw Error("not a state: '" + text + "'");
  return s;
}

ProjectedState project(const TransitionSystem& ts, State s, std::size_t n) {
  if (!ts.contains(s)) throw Error("unknown state " + std::to_string(s));
  return ProjectedState{s, n};
}

std::vector<ProjectedState> successors(const TransitionSystem& ts, ProjectedState p,
                                       const Action& a, std::size_t depth_budget) {
  if (p.budget == 0) return {};
  std::size_t next_budget = p.is_projected() ? p.budget - 1 : kInfinite;
  // Under projection the successor only has to be faithful up to its own budget.
  std::size_t request = std::min(depth_budget, next_budget);
  std::vector<ProjectedState> out;
  for (State s : ts.successors(p.base, a, request)) out.push_back(ProjectedState{s, next_budget});
  return out;
}

std::vector<Action> enabled(const TransitionSystem& ts, ProjectedState p) {
  std::vector<Action> out;
  if (p.budget == 0) return out;
  for (const auto& a : ts.alphabet()) {
    if (!ts.successors(p.base, a, 0).empty()) out.push_back(a);
  }
  return out;
}

MaterializedProjection materialize(const TransitionSystem& ts, ProjectedState p) {
  const FiniteLts& lts = ts.finite();
  if (!lts.contains(p.base)) throw Error("unknown state " + std::to_string(p.base));
  std::map<ProjectedState, State> index;
  MaterializedProjection out;
  std::vector<Transition> transitions;
  std::deque<ProjectedState> queue{p};
  index.emplace(p, 0);
  out.origin.push_back(p);
  while (!queue.empty()) {
    ProjectedState cur = queue.front();
    queue.pop_front();
    State from = index.at(cur);
    for (const auto& a : lts.alphabet()) {
      for (const auto& next : successors(ts, cur, a, kInfinite)) {
        auto [it, fresh] = index.emplace(next, out.origin.size());
        if (fresh) {
          out.origin.push_back(next);
          queue.push_back(next);
        }
        transitions.push_back(Transition{from, a, it->second});
      }
    }
  }
  out.lts = FiniteLts(out.origin.size(), std::move(transitions), 0, lts.alphabet());
  return out;
}

namespace {

constexpr State kFanRoot = 0;
constexpr State kFanLoop = 1;
constexpr State kFanChainBase = 2;

State chain(std::size_t n) { return kFanChainBase + n; }

FamilyLts chain_fan(bool with_loop) {
  const Action a = "a";
  auto contains = [with_loop](State s) { return s != kFanLoop || with_loop; };
  auto successors = [with_loop, a](State s, const Action& act, std::size_t budget) {
    std::vector<State> out;
    if (act != a) return out;
    if (s == kFanRoot) {
      if (budget == kInfinite) throw Error("the root has infinitely many a-successors");
      // Chains of length >= budget agree on every formula of depth <= budget.
      for (std::size_t n = 0; n <= budget; ++n) out.push_back(chain(n));
      if (with_loop) out.push_back(kFanLoop);
    } else if (s == kFanLoop) {
      out.push_back(kFanLoop);
    } else if (s > kFanChainBase) {
      out.push_back(s - 1);
    }
    return out;
  };
  auto infinite = [with_loop](State s) { return s == kFanLoop || (with_loop && s == kFanRoot); };
  auto describe = [](State s) -> std::string {
    if (s == kFanRoot) return "root";
    if (s == kFanLoop) return "loop";
    return "chain(" + std::to_string(s - kFanChainBase) + ")";
  };
  auto parse = [with_loop](const std::string& text) -> std::optional<State> {
    if (text == "root") return kFanRoot;
    if (text == "loop" && with_loop) return kFanLoop;
    const std::string head = "chain(";
    if (text.size() > head.size() + 1 && text.compare(0, head.size(), head) == 0 &&
        text.back() == ')') {
      std::string digits = text.substr(head.size(), text.size() - head.size() - 1);
      if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
        return chain(std::stoull(digits));
      }
    }
    return std::nullopt;
  };
  return FamilyLts(with_loop ? "@right-counterexample" : "@left-counterexample", {a}, kFanRoot, a,
                   successors, infinite, contains, describe, parse);
}

}  // namespace

TransitionSystem left_counterexample() { return chain_fan(false); }
TransitionSystem right_counterexample() { return chain_fan(true); }

std::pair<TransitionSystem, TransitionSystem> counterexample_pair() {
  return {left_counterexample(), right_counterexample()};
}

FiniteLts a_loop(const Action& a) { return FiniteLts(1, {Transition{0, a, 0}}, 0); }

FiniteLts deadlock() { return FiniteLts(1, {}, 0); }

}  // namespace hml
