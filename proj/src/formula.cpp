#include "hml/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace hml {

IndexSet IndexSet::naturals() {
  IndexSet s;
  s.naturals_ = true;
  return s;
}

IndexSet IndexSet::of(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IndexSet s;
  s.members_ = std::move(members);
  return s;
}

IndexSet IndexSet::range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> m;
  for (std::size_t i = first; i <= last; ++i) m.push_back(i);
  return of(std::move(m));
}

NodePtr make_node(NodeKind kind, Action action, std::vector<NodePtr> children,
                  std::optional<IndexSet> family) {
  return std::make_shared<const Node>(
      Node{kind, std::move(action), std::move(children), std::move(family)});
}

bool structurally_equal(const Node& lhs, const Node& rhs) {
  if (&lhs == &rhs) return true;
  if (lhs.kind != rhs.kind || lhs.action != rhs.action || lhs.family != rhs.family ||
      lhs.children.size() != rhs.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.children.size(); ++i) {
    if (!structurally_equal(*lhs.children[i], *rhs.children[i])) return false;
  }
  return true;
}

namespace {

bool unary(NodeKind k) {
  return k == NodeKind::kNot || k == NodeKind::kDiamond || k == NodeKind::kBox ||
         k == NodeKind::kPower || k == NodeKind::kBoxPower;
}

bool has_action(NodeKind k) {
  return k == NodeKind::kDiamond || k == NodeKind::kBox || k == NodeKind::kPower ||
         k == NodeKind::kBoxPower;
}

struct Counts {
  std::size_t holes = 0;
  std::size_t powers = 0;  // powers not bound by a family inside this subtree
};

class Validator {
 public:
  explicit Validator(bool negation_logic) : negation_(negation_logic) {}

  Counts run(const Node& n) {
    if (auto it = seen_.find(&n); it != seen_.end()) return it->second;
    Counts c = check(n);
    seen_.emplace(&n, c);
    return c;
  }

 private:
  Counts check(const Node& n) {
    switch (n.kind) {
      case NodeKind::kBot:
      case NodeKind::kBox:
      case NodeKind::kOr:
      case NodeKind::kBoxPower:
        if (negation_) throw Error("F, or, [a] and [a]^n are not HML syntax");
        break;
      case NodeKind::kNot:
        if (!negation_) throw Error("negation is not HML+ syntax");
        break;
      default:
        break;
    }
    if (has_action(n.kind) && !is_identifier(n.action)) {
      throw Error("invalid action '" + n.action + "'");
    }
    if (unary(n.kind) && n.children.size() != 1) throw Error("malformed unary node");
    if ((n.kind == NodeKind::kTop || n.kind == NodeKind::kBot || n.kind == NodeKind::kHole) &&
        !n.children.empty()) {
      throw Error("malformed leaf");
    }
    if (n.family && n.kind != NodeKind::kAnd && n.kind != NodeKind::kOr) {
      throw Error("only conjunctions and disjunctions form families");
    }
    if (n.family && n.children.size() != 1) throw Error("a family has exactly one template");

    Counts total;
    if (n.kind == NodeKind::kHole) total.holes = 1;
    for (const auto& c : n.children) {
      if (!c) throw Error("null subformula");
      Counts sub = run(*c);
      total.holes += sub.holes;
      total.powers += sub.powers;
    }
    if (n.kind == NodeKind::kPower || n.kind == NodeKind::kBoxPower) {
      if (total.powers != 0) throw Error("nested powers need their own family");
      if (total.holes != 0) throw Error("a hole inside a power");
      total.powers = 1;
    }
    if (n.family) {
      if (total.powers > 1) throw Error("a template has at most one power");
      if (total.holes != 0) throw Error("a hole inside a family template");
      total.powers = 0;
    }
    return total;
  }

  bool negation_;
  std::unordered_map<const Node*, Counts> seen_;
};

/// Memoizing rewrite over the DAG.
class Rewriter {
 public:
  using Fn = std::function<NodePtr(const Node&, Rewriter&)>;
  explicit Rewriter(Fn fn) : fn_(std::move(fn)) {}

  NodePtr operator()(const NodePtr& n) {
    if (auto it = cache_.find(n.get()); it != cache_.end()) return it->second;
    NodePtr out = fn_(*n, *this);
    cache_.emplace(n.get(), out);
    return out;
  }

 private:
  Fn fn_;
  std::unordered_map<const Node*, NodePtr> cache_;
};

std::vector<NodePtr> map_children(const Node& n, Rewriter& rec) {
  std::vector<NodePtr> out;
  out.reserve(n.children.size());
  for (const auto& c : n.children) out.push_back(rec(c));
  return out;
}

bool same_children(const Node& n, const std::vector<NodePtr>& kids) {
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i] != n.children[i]) return false;
  }
  return true;
}

/// The template's own power node, if any, and the number of negations above it.
const Node* find_power(const Node& n, std::size_t& negations) {
  if (n.kind == NodeKind::kPower || n.kind == NodeKind::kBoxPower) return &n;
  if (n.family) return nullptr;
  for (const auto& c : n.children) {
    std::size_t below = 0;
    if (const Node* p = find_power(*c, below)) {
      negations = below + (n.kind == NodeKind::kNot ? 1 : 0);
      return p;
    }
  }
  return nullptr;
}

NodePtr instantiate_impl(const NodePtr& n, std::size_t k) {
  if (n->kind == NodeKind::kPower || n->kind == NodeKind::kBoxPower) {
    NodeKind step = n->kind == NodeKind::kPower ? NodeKind::kDiamond : NodeKind::kBox;
    NodePtr out = n->children.front();
    for (std::size_t i = 0; i < k; ++i) out = make_node(step, n->action, {out});
    return out;
  }
  if (n->family) return n;
  std::vector<NodePtr> kids;
  kids.reserve(n->children.size());
  for (const auto& c : n->children) kids.push_back(instantiate_impl(c, k));
  if (same_children(*n, kids)) return n;
  return make_node(n->kind, n->action, std::move(kids), n->family);
}

NodePtr substitute_impl(const NodePtr& n, const NodePtr& arg) {
  if (n->kind == NodeKind::kHole) return arg;
  std::vector<NodePtr> kids;
  kids.reserve(n->children.size());
  bool changed = false;
  for (const auto& c : n->children) {
    kids.push_back(changed ? c : substitute_impl(c, arg));
    if (kids.back() != c) changed = true;
  }
  if (!changed) return n;
  return make_node(n->kind, n->action, std::move(kids), n->family);
}

bool path_to_hole(const Node& n, std::size_t& negations) {
  if (n.kind == NodeKind::kHole) return true;
  for (const auto& c : n.children) {
    if (path_to_hole(*c, negations)) {
      if (n.kind == NodeKind::kNot) ++negations;
      return true;
    }
  }
  return false;
}

bool has_own_power(const Node& tpl) {
  std::size_t unused = 0;
  return find_power(tpl, unused) != nullptr;
}

class DepthMemo {
 public:
  std::size_t operator()(const Node& n) {
    if (auto it = cache_.find(&n); it != cache_.end()) return it->second;
    std::size_t d = compute(n);
    cache_.emplace(&n, d);
    return d;
  }

 private:
  std::size_t compute(const Node& n) {
    switch (n.kind) {
      case NodeKind::kTop:
      case NodeKind::kBot:
      case NodeKind::kHole:
        return 0;
      case NodeKind::kNot:
        return (*this)(n.child());
      case NodeKind::kDiamond:
      case NodeKind::kBox:
        return saturating_add(1, (*this)(n.child()));
      case NodeKind::kPower:
      case NodeKind::kBoxPower:
        return kInfinite;
      case NodeKind::kAnd:
      case NodeKind::kOr: {
        if (n.family) {
          const Node& tpl = n.child();
          if (!has_own_power(tpl)) return (*this)(tpl);
          if (n.family->is_naturals()) return kInfinite;
          std::size_t d = 0;
          for (std::size_t j : n.family->members()) {
            NodePtr inst = instantiate(tpl, j);
            d = std::max(d, DepthMemo{}(*inst));
          }
          return d;
        }
        std::size_t d = 0;
        for (const auto& c : n.children) d = std::max(d, (*this)(*c));
        return d;
      }
    }
    return 0;
  }

  std::unordered_map<const Node*, std::size_t> cache_;
};

std::size_t lambda_impl(const Node& n, LambdaMode mode) {
  switch (n.kind) {
    case NodeKind::kTop:
    case NodeKind::kBot:
    case NodeKind::kHole:
      return 0;
    case NodeKind::kNot:
    case NodeKind::kDiamond:
    case NodeKind::kBox:
    case NodeKind::kPower:
    case NodeKind::kBoxPower:
      return lambda_impl(n.child(), mode);
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      if (n.family) {
        std::size_t inner = lambda_impl(n.child(), mode);
        bool counts = n.family->is_naturals() &&
                      (mode == LambdaMode::kFin || depth(n) == kInfinite);
        return counts ? inner + 1 : inner;
      }
      std::size_t best = 0;
      for (const auto& c : n.children) best = std::max(best, lambda_impl(*c, mode));
      return best;
    }
  }
  return 0;
}

std::size_t complexity_impl(const Node& n) {
  switch (n.kind) {
    case NodeKind::kTop:
    case NodeKind::kBot:
      return 1;
    case NodeKind::kHole:
      throw Error("complexity of a context is undefined");
    case NodeKind::kNot:
    case NodeKind::kDiamond:
    case NodeKind::kBox:
      return saturating_add(1, complexity_impl(n.child()));
    case NodeKind::kPower:
    case NodeKind::kBoxPower:
      throw Error("complexity of a template is undefined");
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      std::size_t best = 0;
      if (n.family) {
        if (n.family->is_naturals()) {
          throw Error("complexity is only defined on instantiated formulas");
        }
        for (std::size_t j : n.family->members()) {
          best = std::max(best, complexity_impl(*instantiate(n.child(), j)));
        }
      } else {
        for (const auto& c : n.children) best = std::max(best, complexity_impl(*c));
      }
      return saturating_add(1, best);
    }
  }
  return 0;
}

NodeKind dual(NodeKind k) {
  switch (k) {
    case NodeKind::kTop: return NodeKind::kBot;
    case NodeKind::kBot: return NodeKind::kTop;
    case NodeKind::kAnd: return NodeKind::kOr;
    case NodeKind::kOr: return NodeKind::kAnd;
    case NodeKind::kDiamond: return NodeKind::kBox;
    case NodeKind::kBox: return NodeKind::kDiamond;
    case NodeKind::kPower: return NodeKind::kBoxPower;
    case NodeKind::kBoxPower: return NodeKind::kPower;
    case NodeKind::kHole: return NodeKind::kHole;
    case NodeKind::kNot: break;
  }
  throw Error("complement is defined on HML+ only");
}

std::size_t unfolded_count(const Node& n, bool negations_only,
                           std::unordered_map<const Node*, std::size_t>& cache) {
  if (auto it = cache.find(&n); it != cache.end()) return it->second;
  std::size_t total = (!negations_only || n.kind == NodeKind::kNot) ? 1 : 0;
  for (const auto& c : n.children) total = saturating_add(total, unfolded_count(*c, negations_only, cache));
  cache.emplace(&n, total);
  return total;
}

void collect_families(const Node& n, bool infinite_depth_only, Address& path,
                      std::vector<Address>& out) {
  if (n.family) {
    if (n.family->is_naturals() && (!infinite_depth_only || depth(n) == kInfinite)) {
      out.push_back(path);
    }
    return;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    collect_families(*n.children[i], infinite_depth_only, path, out);
    path.pop_back();
  }
}

}  // namespace

void validate(const Node& node, bool negation_logic, Role role) {
  Counts c = Validator(negation_logic).run(node);
  switch (role) {
    case Role::kFormula:
      if (c.holes != 0) throw Error("a formula cannot contain a hole");
      if (c.powers != 0) throw Error("<a>^n may only occur inside a family");
      break;
    case Role::kTemplate:
      if (c.holes != 0) throw Error("a template cannot contain a hole");
      if (c.powers > 1) throw Error("a template has at most one power");
      break;
    case Role::kContext:
      if (c.holes != 1) throw Error("a context has exactly one hole");
      if (c.powers != 0) throw Error("<a>^n may only occur inside a family");
      break;
  }
}

Formula neg(const Formula& f) { return Formula(make_node(NodeKind::kNot, {}, {f.ptr()})); }

PosFormula bot() { return PosFormula(make_node(NodeKind::kBot)); }

PosFormula box(Action a, const PosFormula& body) {
  return PosFormula(make_node(NodeKind::kBox, std::move(a), {body.ptr()}));
}

PosFormula disj(const std::vector<PosFormula>& members) {
  std::vector<NodePtr> kids;
  for (const auto& m : members) kids.push_back(m.ptr());
  return PosFormula(make_node(NodeKind::kOr, {}, std::move(kids)));
}

PosFormula disj_family(const PosTemplate& tpl, IndexSet indices) {
  return PosFormula(make_node(NodeKind::kOr, {}, {tpl.ptr()}, std::move(indices)));
}

PosTemplate box_power(Action a, const PosFormula& body) {
  return PosTemplate(make_node(NodeKind::kBoxPower, std::move(a), {body.ptr()}));
}

Context in_neg(const Context& inner) {
  return Context(make_node(NodeKind::kNot, {}, {inner.ptr()}));
}

PosContext in_box(Action a, const PosContext& inner) {
  return PosContext(make_node(NodeKind::kBox, std::move(a), {inner.ptr()}));
}

PosContext in_disj(const PosContext& inner, const std::vector<PosFormula>& siblings,
                   std::size_t position) {
  std::vector<NodePtr> kids;
  for (const auto& s : siblings) kids.push_back(s.ptr());
  if (position > kids.size()) position = kids.size();
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(position), inner.ptr());
  return PosContext(make_node(NodeKind::kOr, {}, std::move(kids)));
}

NodePtr instantiate(const Node& tpl, std::size_t n) {
  // Share the caller's tree where nothing changes.
  auto alias = std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &tpl);
  NodePtr out = instantiate_impl(alias, n);
  if (out.get() == &tpl) return std::make_shared<const Node>(tpl);
  return out;
}

Monotonicity template_monotonicity(const Node& tpl) {
  std::size_t negations = 0;
  const Node* p = find_power(tpl, negations);
  if (p == nullptr) return Monotonicity::kConstant;
  bool even = negations % 2 == 0;
  if (p->kind == NodeKind::kPower && p->child().kind == NodeKind::kTop) {
    return even ? Monotonicity::kAntitone : Monotonicity::kIsotone;
  }
  if (p->kind == NodeKind::kBoxPower && p->child().kind == NodeKind::kBot) {
    return even ? Monotonicity::kIsotone : Monotonicity::kAntitone;
  }
  return Monotonicity::kUnknown;
}

NodePtr substitute(const Node& ctx, const NodePtr& arg) {
  auto alias = std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &ctx);
  NodePtr out = substitute_impl(alias, arg);
  if (out.get() == &ctx) return std::make_shared<const Node>(ctx);
  return out;
}

Polarity context_polarity(const Context& ctx) {
  std::size_t negations = 0;
  path_to_hole(ctx.node(), negations);
  return negations % 2 == 0 ? Polarity::kPositive : Polarity::kNegative;
}

std::size_t depth(const Node& node) { return DepthMemo{}(node); }

std::size_t complexity(const Node& node) { return complexity_impl(node); }

std::size_t lambda_measure(const Node& node, LambdaMode mode) { return lambda_impl(node, mode); }

NodePtr complement(const Node& node) {
  Rewriter rec([](const Node& n, Rewriter& self) {
    return make_node(dual(n.kind), n.action, map_children(n, self), n.family);
  });
  return rec(std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &node));
}

PosFormula complement(const PosFormula& f) { return PosFormula(complement(f.node())); }
PosTemplate complement(const PosTemplate& tpl) { return PosTemplate(complement(tpl.node())); }
PosContext complement(const PosContext& ctx) { return PosContext(complement(ctx.node())); }

NodePtr to_positive(const Node& node) {
  Rewriter rec([](const Node& n, Rewriter& self) -> NodePtr {
    switch (n.kind) {
      case NodeKind::kTop:
      case NodeKind::kHole:
        return make_node(n.kind);
      case NodeKind::kNot:
        return complement(*self(n.children.front()));
      case NodeKind::kDiamond:
      case NodeKind::kAnd:
      case NodeKind::kPower:
        return make_node(n.kind, n.action, map_children(n, self), n.family);
      default:
        throw Error("P translation is defined on HML only");
    }
  });
  return rec(std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &node));
}

PosFormula to_positive(const Formula& f) { return PosFormula(to_positive(f.node())); }
PosTemplate to_positive(const Template& tpl) { return PosTemplate(to_positive(tpl.node())); }

TranslatedContext translate_context(const Context& ctx) {
  return TranslatedContext{PosContext(to_positive(ctx.node())), context_polarity(ctx)};
}

NodePtr cut(std::size_t n, const Node& node, bool negation_logic) {
  struct Key {
    const Node* node;
    std::size_t n;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>{}(k.node) * 31 + k.n;
    }
  };
  std::unordered_map<Key, NodePtr, KeyHash> cache;
  std::vector<NodePtr> keep_alive;

  std::function<NodePtr(const Node&, std::size_t)> rec = [&](const Node& x,
                                                             std::size_t budget) -> NodePtr {
    Key key{&x, budget};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    NodePtr out;
    auto map_all = [&](std::size_t b) {
      std::vector<NodePtr> kids;
      for (const auto& c : x.children) kids.push_back(rec(*c, b));
      return kids;
    };
    switch (x.kind) {
      case NodeKind::kTop:
      case NodeKind::kBot:
      case NodeKind::kHole:
        out = make_node(x.kind);
        break;
      case NodeKind::kNot:
        out = make_node(NodeKind::kNot, {}, map_all(budget));
        break;
      case NodeKind::kDiamond:
        if (budget == 0) {
          out = negation_logic ? make_node(NodeKind::kNot, {}, {make_node(NodeKind::kTop)})
                               : make_node(NodeKind::kBot);
        } else {
          out = make_node(NodeKind::kDiamond, x.action, map_all(budget - 1));
        }
        break;
      case NodeKind::kBox:
        out = budget == 0 ? make_node(NodeKind::kTop)
                          : make_node(NodeKind::kBox, x.action, map_all(budget - 1));
        break;
      case NodeKind::kPower:
      case NodeKind::kBoxPower:
        throw Error("cannot cut a bare template");
      case NodeKind::kAnd:
      case NodeKind::kOr:
        if (!x.family) {
          out = make_node(x.kind, {}, map_all(budget));
        } else if (!has_own_power(x.child())) {
          // Constant template: every instance is the template itself.
          out = make_node(x.kind, {}, {rec(x.child(), budget)}, x.family);
        } else {
          // Instances beyond budget + 1 all cut to the same formula.
          std::vector<std::size_t> indices =
              x.family->is_naturals() ? IndexSet::range(0, budget + 1).members()
                                      : x.family->members();
          std::vector<NodePtr> kids;
          for (std::size_t j : indices) {
            NodePtr inst = instantiate(x.child(), j);
            keep_alive.push_back(inst);
            kids.push_back(rec(*inst, budget));
          }
          out = make_node(x.kind, {}, std::move(kids));
        }
        break;
    }
    cache.emplace(key, out);
    return out;
  };
  return rec(node, n);
}

const Node& node_at(const Node& root, const Address& address) {
  const Node* cur = &root;
  for (std::size_t i : address) {
    if (cur->family || i >= cur->children.size()) throw Error("address leaves the formula");
    cur = cur->children[i].get();
  }
  return *cur;
}

NodePtr replace_at(const Node& root, const Address& address, const NodePtr& replacement) {
  std::function<NodePtr(const Node&, std::size_t)> rec = [&](const Node& n,
                                                             std::size_t level) -> NodePtr {
    if (level == address.size()) return replacement;
    std::size_t i = address[level];
    if (n.family || i >= n.children.size()) throw Error("address leaves the formula");
    std::vector<NodePtr> kids = n.children;
    kids[i] = rec(*n.children[i], level + 1);
    return make_node(n.kind, n.action, std::move(kids), n.family);
  };
  return rec(root, 0);
}

std::vector<Address> infinite_families(const Node& root, bool infinite_depth_only) {
  std::vector<Address> out;
  Address path;
  collect_families(root, infinite_depth_only, path, out);
  return out;
}

std::vector<NodePtr> finite_subconjunctions(const Node& root, const Address& address,
                                            std::size_t bound) {
  const Node& target = node_at(root, address);
  if (!target.is_infinite_family()) {
    throw Error("the address does not name a family over the naturals");
  }
  if (bound >= 20) throw Error("subset enumeration bound too large");
  std::vector<NodePtr> out;
  const std::size_t width = bound + 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << width); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < width; ++j) {
      if (mask & (std::size_t{1} << j)) members.push_back(j);
    }
    NodePtr family = make_node(target.kind, {}, target.children, IndexSet::of(std::move(members)));
    out.push_back(replace_at(root, address, family));
  }
  return out;
}

std::size_t negation_count(const Node& node) {
  std::unordered_map<const Node*, std::size_t> cache;
  return unfolded_count(node, true, cache);
}

std::size_t tree_size(const Node& node) {
  std::unordered_map<const Node*, std::size_t> cache;
  return unfolded_count(node, false, cache);
}

}  // namespace hml
