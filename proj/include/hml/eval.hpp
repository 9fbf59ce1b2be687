#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "hml/formula.hpp"
#include "hml/lts.hpp"

namespace hml {

/// A schematic family that the evaluator cannot decide exactly.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// A system plus an evaluation cache. Not safe for concurrent use; give each
/// thread its own environment.
class EvalEnvironment {
 public:
  explicit EvalEnvironment(TransitionSystem system, bool memoize = true);

  const TransitionSystem& system() const { return system_; }

  /// Index from which antitone families are constant at unprojected states.
  /// Defaults to the state count of a Finite system.
  std::size_t schematic_bound() const { return schematic_bound_; }
  void set_schematic_bound(std::size_t bound);

  bool memoizing() const { return memoize_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo();

 private:
  struct Key {
    const Node* node;
    State base;
    std::size_t budget;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct InstanceKey {
    const Node* tpl;
    std::size_t n;
    friend bool operator==(const InstanceKey&, const InstanceKey&) = default;
  };
  struct InstanceHash {
    std::size_t operator()(const InstanceKey& k) const;
  };

  friend class Evaluator;

  TransitionSystem system_;
  std::size_t schematic_bound_ = 0;
  bool memoize_ = true;
  std::unordered_map<Key, bool, KeyHash> memo_;
  // Keeps every node that a memo key points at alive.
  std::unordered_map<const Node*, NodePtr> pinned_;
  std::unordered_map<InstanceKey, NodePtr, InstanceHash> instances_;
};

bool satisfies(EvalEnvironment& env, ProjectedState p, const NodePtr& phi);

template <Logic L>
bool satisfies(EvalEnvironment& env, ProjectedState p, const BasicFormula<L>& phi) {
  return satisfies(env, p, phi.ptr());
}

template <Logic L>
bool satisfies(EvalEnvironment& env, State s, const BasicFormula<L>& phi) {
  return satisfies(env, ProjectedState{s, kInfinite}, phi.ptr());
}

/// States of a Finite system satisfying phi, as a membership vector, computed
/// bottom-up. Throws Error for Family systems.
std::vector<bool> satisfying_set(EvalEnvironment& env, const NodePtr& phi);

template <Logic L>
std::vector<bool> satisfying_set(EvalEnvironment& env, const BasicFormula<L>& phi) {
  return satisfying_set(env, phi.ptr());
}

/// Depth used to request Family representatives: like depth(), except that
/// families decided by the infinite-path oracle or by a single instance count
/// as that instance. kInfinite when no finite request suffices.
std::size_t oracle_depth(const Node& phi);

}  // namespace hml
