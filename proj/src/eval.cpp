#include "hml/eval.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace hml {

namespace {

bool is_power_of(const Node& tpl, NodeKind power, NodeKind body) {
  return tpl.kind == power && tpl.child().kind == body;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

/// How a family over the naturals is decided.
enum class Rule {
  kFirstInstance,  // constant, or the family's value is its index-0 instance
  kStableInstance, // the instance at the stabilization index
  kUnsupported,
};

Rule family_rule(const Node& family) {
  Monotonicity m = template_monotonicity(family.child());
  if (m == Monotonicity::kConstant) return Rule::kFirstInstance;
  if (m == Monotonicity::kUnknown) return Rule::kUnsupported;
  bool conj = family.kind == NodeKind::kAnd;
  bool antitone = m == Monotonicity::kAntitone;
  // and over an isotone chain and or over an antitone chain collapse to index 0.
  return conj == antitone ? Rule::kStableInstance : Rule::kFirstInstance;
}

/// The shapes decided by the infinite-path oracle: and of <a>^n T, or of [a]^n F.
bool oracle_shape(const Node& family) {
  if (family.kind == NodeKind::kAnd) {
    return is_power_of(family.child(), NodeKind::kPower, NodeKind::kTop);
  }
  return is_power_of(family.child(), NodeKind::kBoxPower, NodeKind::kBot);
}

std::size_t oracle_depth_impl(const Node& n, std::unordered_map<const Node*, std::size_t>& memo);

/// Instances are temporaries, so their depth gets a memo of its own.
std::size_t instance_depth(const Node& family, std::size_t i) {
  NodePtr inst = instantiate(family.child(), i);
  std::unordered_map<const Node*, std::size_t> memo;
  return oracle_depth_impl(*inst, memo);
}

std::size_t oracle_depth_impl(const Node& n, std::unordered_map<const Node*, std::size_t>& memo) {
  if (auto it = memo.find(&n); it != memo.end()) return it->second;
  std::size_t d = 0;
  switch (n.kind) {
    case NodeKind::kTop:
    case NodeKind::kBot:
    case NodeKind::kHole:
      d = 0;
      break;
    case NodeKind::kNot:
      d = oracle_depth_impl(n.child(), memo);
      break;
    case NodeKind::kDiamond:
    case NodeKind::kBox:
      d = saturating_add(1, oracle_depth_impl(n.child(), memo));
      break;
    case NodeKind::kPower:
    case NodeKind::kBoxPower:
      d = kInfinite;
      break;
    case NodeKind::kAnd:
    case NodeKind::kOr:
      if (!n.family) {
        for (const auto& c : n.children) d = std::max(d, oracle_depth_impl(*c, memo));
      } else if (n.family->is_finite()) {
        for (std::size_t i : n.family->members()) d = std::max(d, instance_depth(n, i));
      } else {
        switch (family_rule(n)) {
          case Rule::kFirstInstance:
            d = instance_depth(n, 0);
            break;
          case Rule::kStableInstance:
            d = oracle_shape(n) ? 0 : kInfinite;
            break;
          case Rule::kUnsupported:
            d = kInfinite;
            break;
        }
      }
      break;
  }
  memo.emplace(&n, d);
  return d;
}

}  // namespace

std::size_t EvalEnvironment::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<const void*>{}(k.node);
  h = mix(h, k.base);
  return mix(h, k.budget);
}

std::size_t EvalEnvironment::InstanceHash::operator()(const InstanceKey& k) const {
  return mix(std::hash<const void*>{}(k.tpl), k.n);
}

EvalEnvironment::EvalEnvironment(TransitionSystem system, bool memoize)
    : system_(std::move(system)), memoize_(memoize) {
  if (system_.is_finite()) schematic_bound_ = system_.finite().state_count();
}

void EvalEnvironment::set_schematic_bound(std::size_t bound) {
  schematic_bound_ = bound;
  memo_.clear();
}

void EvalEnvironment::clear_memo() {
  memo_.clear();
  pinned_.clear();
  instances_.clear();
}

class Evaluator {
 public:
  explicit Evaluator(EvalEnvironment& env) : env_(env) {}

  void pin(const NodePtr& phi) {
    if (env_.memoize_) env_.pinned_.emplace(phi.get(), phi);
  }

  void release() {
    if (!env_.memoize_) env_.instances_.clear();
  }

  bool eval(ProjectedState p, const Node& n) {
    if (!env_.memoize_) return compute(p, n);
    EvalEnvironment::Key key{&n, p.base, p.budget};
    if (auto it = env_.memo_.find(key); it != env_.memo_.end()) return it->second;
    bool v = compute(p, n);
    env_.memo_.emplace(key, v);
    return v;
  }

  std::vector<bool> set_of(const Node& n) {
    if (auto it = sets_.find(&n); it != sets_.end()) return it->second;
    const FiniteLts& lts = env_.system_.finite();
    std::size_t count = lts.state_count();
    std::vector<bool> out(count, false);
    auto modal = [&](bool existential) {
      std::vector<bool> body = set_of(n.child());
      for (State s = 0; s < count; ++s) {
        const auto& next = lts.successors(s, n.action);
        bool any = std::any_of(next.begin(), next.end(), [&](State t) { return body[t]; });
        bool all = std::all_of(next.begin(), next.end(), [&](State t) { return body[t]; });
        out[s] = existential ? any : all;
      }
    };
    auto combine = [&](const std::vector<const Node*>& members, bool conj) {
      out.assign(count, conj);
      for (const Node* m : members) {
        std::vector<bool> part = set_of(*m);
        for (State s = 0; s < count; ++s) out[s] = conj ? (out[s] && part[s]) : (out[s] || part[s]);
      }
    };
    switch (n.kind) {
      case NodeKind::kTop:
        out.assign(count, true);
        break;
      case NodeKind::kBot:
        break;
      case NodeKind::kNot:
        out = set_of(n.child());
        out.flip();
        break;
      case NodeKind::kDiamond:
        modal(true);
        break;
      case NodeKind::kBox:
        modal(false);
        break;
      case NodeKind::kAnd:
      case NodeKind::kOr: {
        std::vector<const Node*> members;
        if (!n.family) {
          for (const auto& c : n.children) members.push_back(c.get());
        } else if (n.family->is_finite()) {
          for (std::size_t i : n.family->members()) members.push_back(&instance(n, i));
        } else {
          switch (family_rule(n)) {
            case Rule::kFirstInstance:
              members.push_back(&instance(n, 0));
              break;
            case Rule::kStableInstance:
              members.push_back(&instance(n, env_.schematic_bound_));
              break;
            case Rule::kUnsupported:
              unsupported(n);
          }
        }
        combine(members, n.kind == NodeKind::kAnd);
        break;
      }
      case NodeKind::kHole:
      case NodeKind::kPower:
      case NodeKind::kBoxPower:
        throw Error("cannot evaluate a template or a context");
    }
    sets_.emplace(&n, out);
    return out;
  }

 private:
  bool compute(ProjectedState p, const Node& n) {
    switch (n.kind) {
      case NodeKind::kTop:
        return true;
      case NodeKind::kBot:
        return false;
      case NodeKind::kNot:
        return !eval(p, n.child());
      case NodeKind::kDiamond:
        for (const auto& q : successors(env_.system_, p, n.action, request(p, n.child()))) {
          if (eval(q, n.child())) return true;
        }
        return false;
      case NodeKind::kBox:
        for (const auto& q : successors(env_.system_, p, n.action, request(p, n.child()))) {
          if (!eval(q, n.child())) return false;
        }
        return true;
      case NodeKind::kAnd:
      case NodeKind::kOr:
        return junction(p, n);
      case NodeKind::kHole:
      case NodeKind::kPower:
      case NodeKind::kBoxPower:
        break;
    }
    throw Error("cannot evaluate a template or a context");
  }

  bool junction(ProjectedState p, const Node& n) {
    bool conj = n.kind == NodeKind::kAnd;
    if (!n.family) {
      for (const auto& c : n.children) {
        if (eval(p, *c) != conj) return !conj;
      }
      return conj;
    }
    if (n.family->is_finite()) {
      for (std::size_t i : n.family->members()) {
        if (eval(p, instance(n, i)) != conj) return !conj;
      }
      return conj;
    }
    switch (family_rule(n)) {
      case Rule::kFirstInstance:
        return eval(p, instance(n, 0));
      case Rule::kStableInstance:
        if (p.is_projected()) return eval(p, instance(n, saturating_add(p.budget, 1)));
        if (env_.system_.is_finite()) return eval(p, instance(n, env_.schematic_bound_));
        if (oracle_shape(n)) {
          if (auto path = env_.system_.infinite_path(p.base, n.child().action)) {
            return conj ? *path : !*path;
          }
        }
        break;
      case Rule::kUnsupported:
        break;
    }
    unsupported(n);
  }

  [[noreturn]] void unsupported(const Node& n) const {
    throw UnsupportedFamily("no exact evaluation rule for a family over N with template " +
                            std::string(n.kind == NodeKind::kAnd ? "(conjunction)" : "(disjunction)"));
  }

  const Node& instance(const Node& family, std::size_t i) {
    EvalEnvironment::InstanceKey key{&family.child(), i};
    auto it = env_.instances_.find(key);
    if (it == env_.instances_.end()) {
      it = env_.instances_.emplace(key, hml::instantiate(family.child(), i)).first;
    }
    return *it->second;
  }

  /// Successor depth needed for `body`; a projected point caps it with its budget.
  std::size_t request(ProjectedState p, const Node& body) {
    if (env_.system_.is_finite()) return kInfinite;
    std::size_t d = oracle_depth_impl(body, depths_);
    if (d == kInfinite && !p.is_projected()) {
      throw UnsupportedFamily("a family below a modality needs every successor of a state");
    }
    return d;
  }

  EvalEnvironment& env_;
  std::unordered_map<const Node*, std::size_t> depths_;
  std::unordered_map<const Node*, std::vector<bool>> sets_;
};

bool satisfies(EvalEnvironment& env, ProjectedState p, const NodePtr& phi) {
  if (!env.system().contains(p.base)) throw Error("unknown state " + std::to_string(p.base));
  Evaluator ev(env);
  ev.pin(phi);
  bool v = ev.eval(p, *phi);
  ev.release();
  return v;
}

std::vector<bool> satisfying_set(EvalEnvironment& env, const NodePtr& phi) {
  if (!env.system().is_finite()) throw Error("satisfying_set needs a Finite system");
  Evaluator ev(env);
  ev.pin(phi);
  std::vector<bool> out = ev.set_of(*phi);
  ev.release();
  return out;
}

std::size_t oracle_depth(const Node& phi) {
  std::unordered_map<const Node*, std::size_t> memo;
  return oracle_depth_impl(phi, memo);
}

}  // namespace hml
