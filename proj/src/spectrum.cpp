#include "hml/spectrum.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "hml/formula_io.hpp"

namespace hml {

namespace {

struct Entry {
  Semantics sem;
  std::string_view name;
};

constexpr std::array<Entry, 11> kCatalogue{{
    {Semantics::kTrace, "trace"},
    {Semantics::kCompletedTrace, "completed-trace"},
    {Semantics::kFailures, "failures"},
    {Semantics::kReadiness, "readiness"},
    {Semantics::kSimulation, "simulation"},
    {Semantics::kReadySimulation, "ready-simulation"},
    {Semantics::kBisimulation, "bisimulation"},
    {Semantics::kReachabilityExample, "reachability-example"},
    {Semantics::kFailureTrace, "failure-trace"},
    {Semantics::kReadyTrace, "ready-trace"},
    {Semantics::kNestedSimulation, "nested-simulation"},
}};

void require_supported(Semantics sem) {
  if (!is_supported(sem)) {
    throw UnsupportedSemantics("no characterization or decider for " +
                               std::string(semantics_name(sem)));
  }
}

// Raw node builders; the result is validated once when wrapped in a Formula.
NodePtr top_node() {
  static const NodePtr t = make_node(NodeKind::kTop);
  return t;
}
NodePtr not_node(NodePtr x) { return make_node(NodeKind::kNot, {}, {std::move(x)}); }
NodePtr dia_node(const Action& a, NodePtr x) {
  return make_node(NodeKind::kDiamond, a, {std::move(x)});
}
NodePtr and_node(std::vector<NodePtr> kids) { return make_node(NodeKind::kAnd, {}, std::move(kids)); }

NodePtr wrap(const Trace& sigma, NodePtr body) {
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) body = dia_node(*it, std::move(body));
  return body;
}

/// What a decorated trace may carry after its last action.
enum class Decoration { kNone, kCompleted, kRefusals, kReady, kPositive };

Decoration decoration_of(Semantics sem) {
  switch (sem) {
    case Semantics::kCompletedTrace:
      return Decoration::kCompleted;
    case Semantics::kFailures:
      return Decoration::kRefusals;
    case Semantics::kReadiness:
    case Semantics::kReadySimulation:
    case Semantics::kBisimulation:
      return Decoration::kReady;
    case Semantics::kSimulation:
      return Decoration::kPositive;
    default:
      return Decoration::kNone;
  }
}

/// Decorations satisfied by a state whose enabled actions are `enabled`.
std::vector<NodePtr> decorations(Decoration style, const Alphabet& alphabet,
                                 const std::vector<Action>& enabled) {
  std::vector<NodePtr> out;
  std::vector<Action> refusable;
  for (const auto& a : alphabet) {
    if (!std::binary_search(enabled.begin(), enabled.end(), a)) refusable.push_back(a);
  }
  auto subsets = [](const std::vector<Action>& pool) {
    std::vector<std::vector<Action>> all;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
      std::vector<Action> pick;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((mask >> i) & 1U) pick.push_back(pool[i]);
      }
      all.push_back(std::move(pick));
    }
    return all;
  };
  auto decorate = [](const std::vector<Action>& refused, const std::vector<Action>& ready) {
    std::vector<NodePtr> kids;
    for (const auto& x : refused) kids.push_back(not_node(dia_node(x, top_node())));
    for (const auto& y : ready) kids.push_back(dia_node(y, top_node()));
    return and_node(std::move(kids));
  };
  switch (style) {
    case Decoration::kNone:
      break;
    case Decoration::kCompleted:
      if (enabled.empty() && !alphabet.empty()) out.push_back(decorate(alphabet, {}));
      break;
    case Decoration::kRefusals:
      for (const auto& x : subsets(refusable)) {
        if (!x.empty()) out.push_back(decorate(x, {}));
      }
      break;
    case Decoration::kReady:
      for (const auto& x : subsets(refusable)) {
        for (const auto& y : subsets(enabled)) {
          if (!x.empty() || !y.empty()) out.push_back(decorate(x, y));
        }
      }
      break;
    case Decoration::kPositive:
      for (const auto& y : subsets(enabled)) {
        if (!y.empty()) out.push_back(decorate({}, y));
      }
      break;
  }
  return out;
}

/// Deduplicating formula buffer with a size cap.
class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void add(const NodePtr& n) {
    std::string text = to_string(*n);
    if (seen_.insert(text).second) {
      if (items_.size() >= cap_) throw std::length_error("characterization exceeds the size cap");
      items_.push_back({n, std::move(text)});
    }
  }

  /// Canonical order: depth, negation count, tree size, printed text.
  std::vector<Formula> sorted() {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::string>;
    std::vector<std::pair<Key, NodePtr>> keyed;
    keyed.reserve(items_.size());
    for (auto& [n, text] : items_) {
      keyed.emplace_back(Key{depth(*n), negation_count(*n), tree_size(*n), std::move(text)}, n);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Formula> out;
    out.reserve(keyed.size());
    for (auto& [key, n] : keyed) out.emplace_back(n);
    return out;
  }

 private:
  std::size_t cap_;
  std::unordered_set<std::string> seen_;
  std::vector<std::pair<NodePtr, std::string>> items_;
};

/// Every a-successor of a Finite-system point, without duplicates.
std::vector<ProjectedState> point_successors(const TransitionSystem& ts, ProjectedState p,
                                             const Action& a) {
  if (!ts.is_finite()) throw Error("characterizations over probes need Finite systems");
  auto out = successors(ts, p, a, kInfinite);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Decorated traces realized by one probe: <sigma> T for |sigma| <= trace_bound and
/// <sigma> decoration for |sigma| <= decorated_bound.
void realized(const Probe& probe, const Alphabet& alphabet, Decoration style,
              std::size_t trace_bound, std::size_t decorated_bound, Collector& out) {
  const TransitionSystem& ts = *probe.system;
  Trace sigma;
  std::size_t limit = std::max(trace_bound, decorated_bound);
  auto visit = [&](auto& self, const std::vector<ProjectedState>& current) -> void {
    if (sigma.size() <= trace_bound) out.add(wrap(sigma, top_node()));
    if (sigma.size() <= decorated_bound && style != Decoration::kNone) {
      std::set<std::string> local;
      for (const auto& u : current) {
        for (auto& d : decorations(style, alphabet, enabled(ts, u))) {
          if (local.insert(to_string(*d)).second) out.add(wrap(sigma, d));
        }
      }
    }
    if (sigma.size() >= limit) return;
    for (const auto& a : alphabet) {
      std::vector<ProjectedState> next;
      for (const auto& u : current) {
        for (const auto& v : point_successors(ts, u, a)) next.push_back(v);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) continue;
      sigma.push_back(a);
      self(self, next);
      sigma.pop_back();
    }
  };
  visit(visit, {probe.point});
}

/// Characteristic formulas of bounded depth, shared as a DAG.
class CharacteristicBuilder {
 public:
  CharacteristicBuilder(const TransitionSystem& ts, Semantics sem, const Alphabet& alphabet)
      : ts_(ts), sem_(sem), alphabet_(alphabet) {}

  NodePtr build(ProjectedState u, std::size_t k) {
    if (k == 0) return top_node();
    auto key = std::make_tuple(u.base, u.budget, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<NodePtr> kids;
    for (const auto& a : alphabet_) {
      auto next = point_successors(ts_, u, a);
      for (const auto& v : next) kids.push_back(dia_node(a, build(v, k - 1)));
      bool refuse = next.empty() && sem_ != Semantics::kSimulation;
      if (refuse) kids.push_back(not_node(dia_node(a, top_node())));
      if (sem_ == Semantics::kBisimulation && !next.empty() && k > 1) {
        // Every a-successor matches one of u's a-successors.
        std::vector<NodePtr> none;
        for (const auto& v : next) none.push_back(not_node(build(v, k - 1)));
        kids.push_back(not_node(dia_node(a, and_node(std::move(none)))));
      }
    }
    NodePtr out = kids.empty() ? top_node() : and_node(std::move(kids));
    memo_.emplace(key, out);
    return out;
  }

 private:
  const TransitionSystem& ts_;
  Semantics sem_;
  const Alphabet& alphabet_;
  std::map<std::tuple<State, std::size_t, std::size_t>, NodePtr> memo_;
};

/// Reachability of each action within `bound` steps, E<c>T up to depth bound + 1:
/// R_0 = <c>T and R_{k+1} = not and(not <c>T, not <a>R_k for every a).
std::vector<Formula> reachability_formulas(const Alphabet& alphabet, std::size_t bound) {
  std::vector<Formula> out;
  for (const auto& c : alphabet) {
    NodePtr here = dia_node(c, top_node());
    NodePtr reach = here;
    for (std::size_t k = 0; k < bound; ++k) {
      std::vector<NodePtr> members{not_node(here)};
      for (const auto& a : alphabet) members.push_back(not_node(dia_node(a, reach)));
      reach = not_node(and_node(std::move(members)));
    }
    out.emplace_back(reach);
  }
  return out;
}

/// Literal layers of the context-free branching-time generators.
std::vector<Formula> branching_formulas(Semantics sem, const Alphabet& alphabet, std::size_t bound,
                                        std::size_t cap) {
  Collector out(cap);
  out.add(top_node());
  std::vector<NodePtr> bodies{top_node()};
  std::vector<NodePtr> refusals;
  if (sem == Semantics::kReadySimulation) {
    for (const auto& a : alphabet) refusals.push_back(not_node(dia_node(a, top_node())));
  }
  for (std::size_t level = 1; level <= bound; ++level) {
    std::vector<NodePtr> atoms;
    for (const auto& a : alphabet) {
      for (const auto& b : bodies) atoms.push_back(dia_node(a, b));
    }
    for (const auto& x : atoms) out.add(x);
    if (sem == Semantics::kBisimulation) {
      for (const auto& x : atoms) out.add(not_node(x));
    }
    for (const auto& r : refusals) out.add(r);
    if (level == bound) break;

    // Conjunctions of consistent literal sets become the next bodies.
    std::vector<NodePtr> literals = atoms;
    literals.insert(literals.end(), refusals.begin(), refusals.end());
    std::size_t choices = sem == Semantics::kBisimulation ? 3 : 2;
    double combos = 1;
    for (std::size_t i = 0; i < literals.size(); ++i) combos *= static_cast<double>(choices);
    if (combos > static_cast<double>(cap)) {
      throw std::length_error("characterization exceeds the size cap");
    }
    std::vector<NodePtr> next{top_node()};
    std::vector<std::size_t> pick(literals.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices) pick[i++] = 0;
      if (i == pick.size()) break;
      std::vector<NodePtr> kids;
      for (std::size_t j = 0; j < pick.size(); ++j) {
        if (pick[j] == 1) kids.push_back(literals[j]);
        if (pick[j] == 2) kids.push_back(not_node(literals[j]));
      }
      next.push_back(kids.size() == 1 ? kids.front() : and_node(std::move(kids)));
    }
    bodies = std::move(next);
  }
  return out.sorted();
}

std::vector<Trace> all_traces(const Alphabet& alphabet, std::size_t bound, std::size_t cap) {
  std::vector<Trace> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == bound) continue;
    for (const auto& a : alphabet) {
      if (out.size() >= cap) throw std::length_error("characterization exceeds the size cap");
      Trace next = out[i];
      next.push_back(a);
      out.push_back(std::move(next));
    }
  }
  return out;
}

const FiniteLts& finite_of(const TransitionSystem& ts) {
  if (!ts.is_finite()) throw Error("the decider needs a Finite system");
  return ts.finite();
}

/// Determinized walk: calls visit(trace, reached states) for every trace up to bound.
template <class Visit>
void walk_traces(const FiniteLts& lts, State s, std::size_t bound, Visit&& visit) {
  Trace sigma;
  auto rec = [&](auto& self, const std::vector<State>& current) -> void {
    visit(static_cast<const Trace&>(sigma), current);
    if (sigma.size() >= bound) return;
    for (const auto& a : lts.alphabet()) {
      std::vector<State> next;
      for (State u : current) {
        for (State v : lts.successors(u, a)) next.push_back(v);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) continue;
      sigma.push_back(a);
      self(self, next);
      sigma.pop_back();
    }
  };
  rec(rec, {s});
}

}  // namespace

std::string_view semantics_name(Semantics sem) {
  for (const auto& e : kCatalogue) {
    if (e.sem == sem) return e.name;
  }
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view name) {
  for (const auto& e : kCatalogue) {
    if (e.name == name) return e.sem;
  }
  return std::nullopt;
}

const std::vector<Semantics>& all_semantics() {
  static const std::vector<Semantics> all = [] {
    std::vector<Semantics> v;
    for (const auto& e : kCatalogue) v.push_back(e.sem);
    return v;
  }();
  return all;
}

const std::vector<Semantics>& supported_semantics() {
  static const std::vector<Semantics> v(all_semantics().begin(), all_semantics().begin() + 8);
  return v;
}

bool is_supported(Semantics sem) {
  return sem != Semantics::kFailureTrace && sem != Semantics::kReadyTrace &&
         sem != Semantics::kNestedSimulation;
}

std::size_t default_bound(Semantics sem, std::size_t n1, std::size_t n2) {
  return sem == Semantics::kBisimulation ? n1 + n2 : n1 * n2;
}

CharacterizationSet char_formulas(Semantics sem, const Alphabet& alphabet, std::size_t bound,
                                  std::size_t cap) {
  require_supported(sem);
  CharacterizationSet o{sem, alphabet, bound, {}};
  switch (sem) {
    case Semantics::kReachabilityExample:
      o.formulas = reachability_formulas(alphabet, bound);
      return o;
    case Semantics::kSimulation:
    case Semantics::kReadySimulation:
    case Semantics::kBisimulation:
      o.formulas = branching_formulas(sem, alphabet, bound, cap);
      return o;
    default:
      break;
  }
  // Decorated traces: every decoration some enabled set admits.
  Decoration style = decoration_of(sem);
  std::vector<NodePtr> decos;
  std::set<std::string> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << alphabet.size()); ++mask) {
    std::vector<Action> enabled;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if ((mask >> i) & 1U) enabled.push_back(alphabet[i]);
    }
    for (auto& d : decorations(style, alphabet, enabled)) {
      if (seen.insert(to_string(*d)).second) decos.push_back(d);
    }
  }
  Collector out(cap);
  for (const auto& sigma : all_traces(alphabet, bound, cap)) {
    out.add(wrap(sigma, top_node()));
    for (const auto& d : decos) out.add(wrap(sigma, d));
  }
  o.formulas = out.sorted();
  return o;
}

CharacterizationSet char_formulas_for(Semantics sem, const Alphabet& alphabet, std::size_t bound,
                                      const std::vector<Probe>& probes, std::size_t cap) {
  require_supported(sem);
  CharacterizationSet o{sem, alphabet, bound, {}};
  if (sem == Semantics::kReachabilityExample) {
    o.formulas = reachability_formulas(alphabet, bound);
    return o;
  }
  Decoration style = decoration_of(sem);
  Collector layer(cap);
  bool branching = sem == Semantics::kSimulation || sem == Semantics::kReadySimulation ||
                   sem == Semantics::kBisimulation;
  for (const auto& probe : probes) {
    if (branching) {
      std::size_t shallow = std::min<std::size_t>(bound, 4);
      realized(probe, alphabet, style, shallow, shallow == 0 ? 0 : std::min<std::size_t>(shallow - 1, 3),
               layer);
    } else {
      realized(probe, alphabet, style, bound, bound, layer);
    }
  }
  if (branching && bound == 0) {
    o.formulas = {Formula(top_node())};
    return o;
  }
  o.formulas = layer.sorted();
  if (branching) {
    std::unordered_set<const Node*> seen;
    for (const auto& probe : probes) {
      CharacteristicBuilder builder(*probe.system, sem, alphabet);
      NodePtr chi = builder.build(probe.point, bound);
      if (seen.insert(chi.get()).second) o.formulas.emplace_back(chi);
    }
  }
  return o;
}

EquivResult equiv_modulo(EvalEnvironment& env_s, ProjectedState s, EvalEnvironment& env_t,
                         ProjectedState t, const std::vector<Formula>& formulas) {
  EquivResult r;
  for (const auto& phi : formulas) {
    bool left = satisfies(env_s, s, phi);
    bool right = satisfies(env_t, t, phi);
    if (left != right) {
      r.equivalent = false;
      r.witness = phi;
      r.left_satisfies = left;
      return r;
    }
  }
  return r;
}

EquivResult equivalent(Semantics sem, std::size_t bound, EvalEnvironment& env_s, ProjectedState s,
                       EvalEnvironment& env_t, ProjectedState t) {
  Alphabet alphabet = merge_alphabets(env_s.system().alphabet(), env_t.system().alphabet());
  std::vector<Probe> probes{{&env_s.system(), s}, {&env_t.system(), t}};
  return equiv_modulo(env_s, s, env_t, t, char_formulas_for(sem, alphabet, bound, probes));
}

bool bisimilar(const FiniteLts& l1, State s, const FiniteLts& l2, State t) {
  Alphabet alphabet = merge_alphabets(l1.alphabet(), l2.alphabet());
  std::size_t n1 = l1.state_count();
  std::size_t n = n1 + l2.state_count();
  auto succ = [&](State x, const Action& a) -> const std::vector<State>& {
    return x < n1 ? l1.successors(x, a) : l2.successors(x - n1, a);
  };
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = 1;
  while (true) {
    using Signature = std::pair<std::size_t, std::set<std::pair<std::size_t, std::size_t>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State x = 0; x < n; ++x) {
      Signature sig{block[x], {}};
      for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
        for (State y : succ(x, alphabet[ai])) sig.second.emplace(ai, block[x < n1 ? y : y + n1]);
      }
      next[x] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  return block[s] == block[n1 + t];
}

bool simulated_by(const FiniteLts& l1, State s, const FiniteLts& l2, State t, bool ready) {
  std::size_t n1 = l1.state_count();
  std::size_t n2 = l2.state_count();
  Alphabet alphabet = merge_alphabets(l1.alphabet(), l2.alphabet());
  std::vector<std::vector<bool>> rel(n1, std::vector<bool>(n2, true));
  if (ready) {
    for (State x = 0; x < n1; ++x) {
      for (State y = 0; y < n2; ++y) rel[x][y] = l1.enabled(x) == l2.enabled(y);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (State x = 0; x < n1; ++x) {
      for (State y = 0; y < n2; ++y) {
        if (!rel[x][y]) continue;
        for (const auto& a : alphabet) {
          const auto& ys = l2.successors(y, a);
          for (State x2 : l1.successors(x, a)) {
            bool matched = std::any_of(ys.begin(), ys.end(), [&](State y2) { return rel[x2][y2]; });
            if (!matched) {
              rel[x][y] = false;
              changed = true;
              break;
            }
          }
          if (!rel[x][y]) break;
        }
      }
    }
  }
  return rel[s][t];
}

std::set<Trace> trace_sets(const FiniteLts& lts, State s, std::size_t bound) {
  std::set<Trace> out;
  walk_traces(lts, s, bound, [&](const Trace& sigma, const std::vector<State>&) {
    out.insert(sigma);
  });
  return out;
}

std::set<Trace> completed_traces(const FiniteLts& lts, State s, std::size_t bound) {
  std::set<Trace> out;
  walk_traces(lts, s, bound, [&](const Trace& sigma, const std::vector<State>& reached) {
    for (State u : reached) {
      if (lts.enabled(u).empty()) out.insert(sigma);
    }
  });
  return out;
}

std::set<std::pair<Trace, Alphabet>> failures(const FiniteLts& lts, State s, std::size_t bound,
                                              const Alphabet& alphabet) {
  const Alphabet& sigma_alphabet = alphabet.empty() ? lts.alphabet() : alphabet;
  std::set<std::pair<Trace, Alphabet>> out;
  walk_traces(lts, s, bound, [&](const Trace& sigma, const std::vector<State>& reached) {
    for (State u : reached) {
      std::vector<Action> en = lts.enabled(u);
      Alphabet refusable;
      for (const auto& a : sigma_alphabet) {
        if (!std::binary_search(en.begin(), en.end(), a)) refusable.push_back(a);
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << refusable.size()); ++mask) {
        Alphabet x;
        for (std::size_t i = 0; i < refusable.size(); ++i) {
          if ((mask >> i) & 1U) x.push_back(refusable[i]);
        }
        out.emplace(sigma, std::move(x));
      }
    }
  });
  return out;
}

std::set<std::pair<Trace, Alphabet>> ready_sets(const FiniteLts& lts, State s, std::size_t bound) {
  std::set<std::pair<Trace, Alphabet>> out;
  walk_traces(lts, s, bound, [&](const Trace& sigma, const std::vector<State>& reached) {
    for (State u : reached) out.emplace(sigma, lts.enabled(u));
  });
  return out;
}

bool reachable_action(const TransitionSystem& ts, ProjectedState p, const Action& a,
                      std::size_t bound) {
  std::map<ProjectedState, std::size_t> dist{{p, 0}};
  std::vector<ProjectedState> frontier{p};
  for (std::size_t d = 0;; ++d) {
    std::vector<ProjectedState> next;
    for (const auto& u : frontier) {
      if (!successors(ts, u, a, kInfinite).empty()) return true;
      if (d == bound) continue;
      for (const auto& b : ts.alphabet()) {
        for (const auto& v : successors(ts, u, b, kInfinite)) {
          if (dist.emplace(v, d + 1).second) next.push_back(v);
        }
      }
    }
    if (next.empty() || d == bound) return false;
    frontier = std::move(next);
  }
}

bool decide(Semantics sem, std::size_t bound, const TransitionSystem& ts1, ProjectedState s,
            const TransitionSystem& ts2, ProjectedState t) {
  require_supported(sem);
  auto view = [](const TransitionSystem& ts, ProjectedState p) -> std::pair<FiniteLts, State> {
    if (p.is_projected()) return {materialize(ts, p).lts, 0};
    return {finite_of(ts), p.base};
  };
  if (sem == Semantics::kReachabilityExample) {
    for (const auto& a : merge_alphabets(ts1.alphabet(), ts2.alphabet())) {
      if (reachable_action(ts1, s, a, bound) != reachable_action(ts2, t, a, bound)) return false;
    }
    return true;
  }
  auto [l1, x] = view(ts1, s);
  auto [l2, y] = view(ts2, t);
  switch (sem) {
    case Semantics::kTrace:
      return trace_sets(l1, x, bound) == trace_sets(l2, y, bound);
    case Semantics::kCompletedTrace:
      return trace_sets(l1, x, bound) == trace_sets(l2, y, bound) &&
             completed_traces(l1, x, bound) == completed_traces(l2, y, bound);
    case Semantics::kFailures: {
      Alphabet alphabet = merge_alphabets(l1.alphabet(), l2.alphabet());
      return failures(l1, x, bound, alphabet) == failures(l2, y, bound, alphabet);
    }
    case Semantics::kReadiness:
      return ready_sets(l1, x, bound) == ready_sets(l2, y, bound);
    case Semantics::kSimulation:
      return simulated_by(l1, x, l2, y) && simulated_by(l2, y, l1, x);
    case Semantics::kReadySimulation:
      return simulated_by(l1, x, l2, y, true) && simulated_by(l2, y, l1, x, true);
    case Semantics::kBisimulation:
      return bisimilar(l1, x, l2, y);
    default:
      break;
  }
  throw UnsupportedSemantics("no decider for " + std::string(semantics_name(sem)));
}

}  // namespace hml
