#pragma once

// Reference implementations used as test oracles. They share no code with the
// library beyond the data types: plain recursion, explicit unrolling, brute force.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "hml/formula.hpp"
#include "hml/lts.hpp"

namespace oracle {

using hml::Action;
using hml::FiniteLts;
using hml::Node;
using hml::NodeKind;
using hml::State;

/// Replaces the template's power by `k` nested modalities.
inline hml::NodePtr unroll(const Node& tpl, std::size_t k) {
  if (tpl.kind == NodeKind::kPower || tpl.kind == NodeKind::kBoxPower) {
    NodeKind step = tpl.kind == NodeKind::kPower ? NodeKind::kDiamond : NodeKind::kBox;
    hml::NodePtr body = unroll(tpl.child(), k);
    for (std::size_t i = 0; i < k; ++i) body = hml::make_node(step, tpl.action, {body});
    return body;
  }
  std::vector<hml::NodePtr> kids;
  if (tpl.family) {
    // Nested families keep their own templates.
    return hml::make_node(tpl.kind, tpl.action, tpl.children, tpl.family);
  }
  for (const auto& c : tpl.children) kids.push_back(unroll(*c, k));
  return hml::make_node(tpl.kind, tpl.action, std::move(kids), tpl.family);
}

/// Direct recursive satisfaction. Families over the naturals range over the
/// instances 0..horizon, which is exact once horizon exceeds the state count
/// for the antitone and isotone templates of the library.
inline bool eval(const FiniteLts& lts, State s, const Node& n, std::size_t horizon) {
  switch (n.kind) {
    case NodeKind::kTop:
      return true;
    case NodeKind::kBot:
      return false;
    case NodeKind::kNot:
      return !eval(lts, s, n.child(), horizon);
    case NodeKind::kDiamond:
      for (State t : lts.successors(s, n.action)) {
        if (eval(lts, t, n.child(), horizon)) return true;
      }
      return false;
    case NodeKind::kBox:
      for (State t : lts.successors(s, n.action)) {
        if (!eval(lts, t, n.child(), horizon)) return false;
      }
      return true;
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      bool conj = n.kind == NodeKind::kAnd;
      std::vector<hml::NodePtr> members;
      if (!n.family) {
        members = n.children;
      } else {
        std::vector<std::size_t> idx = n.family->members();
        if (n.family->is_naturals()) {
          for (std::size_t i = 0; i <= horizon; ++i) idx.push_back(i);
        }
        for (std::size_t i : idx) members.push_back(unroll(n.child(), i));
      }
      for (const auto& m : members) {
        if (eval(lts, s, *m, horizon) != conj) return !conj;
      }
      return conj;
    }
    default:
      throw hml::Error("oracle cannot evaluate this node");
  }
}

/// pi_n(s) unrolled into an explicit tree; the root is state 0.
inline FiniteLts unfold(const FiniteLts& lts, State s, std::size_t n) {
  std::vector<hml::Transition> edges;
  std::size_t count = 1;
  std::function<void(State, State, std::size_t)> walk = [&](State at, State id, std::size_t budget) {
    if (budget == 0) return;
    for (const auto& a : lts.alphabet()) {
      for (State t : lts.successors(at, a)) {
        State child = count++;
        edges.push_back({id, a, child});
        walk(t, child, budget - 1);
      }
    }
  };
  walk(s, 0, n);
  return FiniteLts(count, edges, 0, lts.alphabet());
}

/// All traces of length <= bound, by depth-first enumeration.
inline std::set<std::vector<Action>> traces(const FiniteLts& lts, State s, std::size_t bound) {
  std::set<std::vector<Action>> out;
  std::vector<Action> path;
  std::function<void(State)> walk = [&](State at) {
    out.insert(path);
    if (path.size() == bound) return;
    for (const auto& a : lts.alphabet()) {
      for (State t : lts.successors(at, a)) {
        path.push_back(a);
        walk(t);
        path.pop_back();
      }
    }
  };
  walk(s);
  return out;
}

/// Greatest bisimulation between two systems by naive fixpoint iteration on pairs.
inline bool bisimilar(const FiniteLts& l1, State s, const FiniteLts& l2, State t) {
  std::size_t n1 = l1.state_count(), n2 = l2.state_count();
  std::vector<std::vector<bool>> rel(n1, std::vector<bool>(n2, true));
  std::set<Action> acts(l1.alphabet().begin(), l1.alphabet().end());
  acts.insert(l2.alphabet().begin(), l2.alphabet().end());
  bool changed = true;
  auto matched = [&](const FiniteLts& la, State x, const FiniteLts& lb, State y, bool flip) {
    for (const auto& a : acts) {
      for (State x2 : la.successors(x, a)) {
        bool ok = false;
        for (State y2 : lb.successors(y, a)) {
          if (flip ? rel[y2][x2] : rel[x2][y2]) ok = true;
        }
        if (!ok) return false;
      }
    }
    return true;
  };
  while (changed) {
    changed = false;
    for (State x = 0; x < n1; ++x) {
      for (State y = 0; y < n2; ++y) {
        if (rel[x][y] && !(matched(l1, x, l2, y, false) && matched(l2, y, l1, x, true))) {
          rel[x][y] = false;
          changed = true;
        }
      }
    }
  }
  return rel[s][t];
}

}  // namespace oracle
