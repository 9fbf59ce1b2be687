#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hml/action.hpp"

namespace hml {

/// Index set of a schematic family: all naturals, or an explicit finite set.
class IndexSet {
 public:
  static IndexSet naturals();
  static IndexSet of(std::vector<std::size_t> members);
  static IndexSet range(std::size_t first, std::size_t last);  // inclusive

  bool is_naturals() const { return naturals_; }
  bool is_finite() const { return !naturals_; }
  /// Sorted, duplicate-free. Empty for the naturals.
  const std::vector<std::size_t>& members() const { return members_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  bool naturals_ = false;
  std::vector<std::size_t> members_;
};

enum class NodeKind : unsigned char {
  kTop,
  kBot,       // HML+ only
  kHole,      // contexts only
  kNot,       // HML only
  kDiamond,
  kBox,       // HML+ only
  kAnd,
  kOr,        // HML+ only
  kPower,     // <a>^n body, templates only
  kBoxPower,  // [a]^n body, HML+ templates only
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable syntax node shared by both logics. And/Or nodes either list
/// their members (`family` empty) or carry a schematic family whose single
/// child is the template.
struct Node {
  NodeKind kind;
  Action action;
  std::vector<NodePtr> children;
  std::optional<IndexSet> family;

  bool is_schematic() const { return family.has_value(); }
  bool is_infinite_family() const { return family.has_value() && family->is_naturals(); }
  const Node& child(std::size_t i = 0) const { return *children[i]; }
};

NodePtr make_node(NodeKind kind, Action action = {}, std::vector<NodePtr> children = {},
                  std::optional<IndexSet> family = std::nullopt);

bool structurally_equal(const Node& lhs, const Node& rhs);

/// Logic tags. HML has negation; HML+ has F, disjunction and box instead.
struct Hml {
  static constexpr bool kNegation = true;
};
struct HmlPlus {
  static constexpr bool kNegation = false;
};

template <class L>
concept Logic = std::is_same_v<L, Hml> || std::is_same_v<L, HmlPlus>;

enum class Role { kFormula, kTemplate, kContext };

/// Throws Error if the tree is not in the grammar of the logic for the given role.
void validate(const Node& node, bool negation_logic, Role role);

namespace detail {
template <Logic L, Role R>
class Syntax {
 public:
  explicit Syntax(NodePtr node) : node_(std::move(node)) {
    validate(*node_, L::kNegation, R);
  }

  const Node& node() const { return *node_; }
  const NodePtr& ptr() const { return node_; }

  friend bool operator==(const Syntax& lhs, const Syntax& rhs) {
    return lhs.node_ == rhs.node_ || structurally_equal(*lhs.node_, *rhs.node_);
  }

 private:
  NodePtr node_;
};
}  // namespace detail

template <Logic L>
using BasicFormula = detail::Syntax<L, Role::kFormula>;
/// A formula over one free index variable n, bound by the enclosing family.
template <Logic L>
using BasicTemplate = detail::Syntax<L, Role::kTemplate>;
/// A formula with exactly one hole.
template <Logic L>
using BasicContext = detail::Syntax<L, Role::kContext>;

using Formula = BasicFormula<Hml>;
using PosFormula = BasicFormula<HmlPlus>;
using Template = BasicTemplate<Hml>;
using PosTemplate = BasicTemplate<HmlPlus>;
using Context = BasicContext<Hml>;
using PosContext = BasicContext<HmlPlus>;

// Construction ----------------------------------------------------------------

template <Logic L>
BasicFormula<L> top() {
  return BasicFormula<L>(make_node(NodeKind::kTop));
}

/// F in HML+, and its encoding `not T` in HML.
template <Logic L>
BasicFormula<L> falsum() {
  if constexpr (L::kNegation) {
    return BasicFormula<L>(make_node(NodeKind::kNot, {}, {make_node(NodeKind::kTop)}));
  } else {
    return BasicFormula<L>(make_node(NodeKind::kBot));
  }
}

template <Logic L>
BasicFormula<L> diamond(Action a, const BasicFormula<L>& body) {
  return BasicFormula<L>(make_node(NodeKind::kDiamond, std::move(a), {body.ptr()}));
}

template <Logic L>
BasicFormula<L> conj(const std::vector<BasicFormula<L>>& members) {
  std::vector<NodePtr> kids;
  kids.reserve(members.size());
  for (const auto& m : members) kids.push_back(m.ptr());
  return BasicFormula<L>(make_node(NodeKind::kAnd, {}, std::move(kids)));
}

template <Logic L>
BasicFormula<L> conj_family(const BasicTemplate<L>& tpl, IndexSet indices) {
  return BasicFormula<L>(make_node(NodeKind::kAnd, {}, {tpl.ptr()}, std::move(indices)));
}

/// <a>^k body as k nested diamonds.
template <Logic L>
BasicFormula<L> diamond_power(const Action& a, std::size_t k, BasicFormula<L> body) {
  for (std::size_t i = 0; i < k; ++i) body = diamond(a, body);
  return body;
}

Formula neg(const Formula& f);
PosFormula bot();
PosFormula box(Action a, const PosFormula& body);
PosFormula disj(const std::vector<PosFormula>& members);
PosFormula disj_family(const PosTemplate& tpl, IndexSet indices);

/// <a>^n body.
template <Logic L>
BasicTemplate<L> power(Action a, const BasicFormula<L>& body) {
  return BasicTemplate<L>(make_node(NodeKind::kPower, std::move(a), {body.ptr()}));
}
/// [a]^n body.
PosTemplate box_power(Action a, const PosFormula& body);

/// A template that ignores its index.
template <Logic L>
BasicTemplate<L> constant_template(const BasicFormula<L>& f) {
  return BasicTemplate<L>(f.ptr());
}

/// The instance of a template at index n.
NodePtr instantiate(const Node& tpl, std::size_t n);

template <Logic L>
BasicFormula<L> instantiate(const BasicTemplate<L>& tpl, std::size_t n) {
  return BasicFormula<L>(instantiate(tpl.node(), n));
}

/// How instance(n) relates to instance(n+1) semantically.
enum class Monotonicity { kConstant, kAntitone, kIsotone, kUnknown };

/// Antitone: instance(n+1) implies instance(n). Decided syntactically: a
/// <a>^n T (or [a]^n F) power under an even (odd) number of negations.
Monotonicity template_monotonicity(const Node& tpl);

// Contexts --------------------------------------------------------------------

template <Logic L>
BasicContext<L> hole() {
  return BasicContext<L>(make_node(NodeKind::kHole));
}

template <Logic L>
BasicContext<L> in_diamond(Action a, const BasicContext<L>& inner) {
  return BasicContext<L>(make_node(NodeKind::kDiamond, std::move(a), {inner.ptr()}));
}

/// and(siblings[0..position), inner, siblings[position..)).
template <Logic L>
BasicContext<L> in_conj(const BasicContext<L>& inner, const std::vector<BasicFormula<L>>& siblings,
                        std::size_t position = 0) {
  std::vector<NodePtr> kids;
  for (const auto& s : siblings) kids.push_back(s.ptr());
  if (position > kids.size()) position = kids.size();
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(position), inner.ptr());
  return BasicContext<L>(make_node(NodeKind::kAnd, {}, std::move(kids)));
}

Context in_neg(const Context& inner);
PosContext in_box(Action a, const PosContext& inner);
PosContext in_disj(const PosContext& inner, const std::vector<PosFormula>& siblings,
                   std::size_t position = 0);

/// Replaces the hole of `ctx` with `arg`.
NodePtr substitute(const Node& ctx, const NodePtr& arg);

template <Logic L>
BasicFormula<L> substitute(const BasicContext<L>& ctx, const BasicFormula<L>& arg) {
  return BasicFormula<L>(substitute(ctx.node(), arg.ptr()));
}

/// A template placed inside a context.
template <Logic L>
BasicTemplate<L> substitute(const BasicContext<L>& ctx, const BasicTemplate<L>& arg) {
  return BasicTemplate<L>(substitute(ctx.node(), arg.ptr()));
}

enum class Polarity { kPositive, kNegative };

/// Positive iff the hole sits under an even number of negations.
Polarity context_polarity(const Context& ctx);

// Measures --------------------------------------------------------------------

/// d(T) = 0, d(<a>phi) = 1 + d(phi), sup over conjunctions, negation transparent.
/// kInfinite for families over the naturals whose instances grow.
std::size_t depth(const Node& node);

template <Logic L, Role R>
std::size_t depth(const detail::Syntax<L, R>& f) {
  return depth(f.node());
}

/// |T| = 1, |<a>phi| = |not phi| = 1 + |phi|, |and| = 1 + max. Throws Error on
/// families over the naturals.
std::size_t complexity(const Node& node);

template <Logic L>
std::size_t complexity(const BasicFormula<L>& f) {
  return complexity(f.node());
}

enum class LambdaMode { kFin, kFdp };

/// Longest chain of nested infinite conjunctions (FDP: only those of infinite depth).
std::size_t lambda_measure(const Node& node, LambdaMode mode);

inline std::size_t lambda_measure(const Formula& f, LambdaMode mode) {
  return lambda_measure(f.node(), mode);
}

// Transformations -------------------------------------------------------------

/// The dual formula: T<->F, and<->or, <a><->[a], families keep their index set
/// and get a complemented template. Holes stay holes.
NodePtr complement(const Node& node);

PosFormula complement(const PosFormula& f);
PosTemplate complement(const PosTemplate& tpl);
PosContext complement(const PosContext& ctx);

/// Negation-free translation: P(not phi) = complement(P(phi)).
NodePtr to_positive(const Node& node);

PosFormula to_positive(const Formula& f);
PosTemplate to_positive(const Template& tpl);

struct TranslatedContext {
  PosContext context;
  Polarity polarity;
};

/// P(D) with P([]) = [], together with the polarity of D.
TranslatedContext translate_context(const Context& ctx);

/// Replaces every diamond reached at depth n by F (`not T` in HML). A box
/// reached at depth n becomes T. Families are cut instance-wise; the result
/// has depth <= n.
NodePtr cut(std::size_t n, const Node& node, bool negation_logic);

template <Logic L>
BasicFormula<L> cut(std::size_t n, const BasicFormula<L>& f) {
  return BasicFormula<L>(cut(n, f.node(), L::kNegation));
}

// Addressing ------------------------------------------------------------------

/// Child indices from the root. Families are leaves of an address: a path
/// never enters a template.
using Address = std::vector<std::size_t>;

const Node& node_at(const Node& root, const Address& address);

/// Rebuilds `root` with the subtree at `address` replaced.
NodePtr replace_at(const Node& root, const Address& address, const NodePtr& replacement);

/// The context around the subtree at `address`, and the subtree.
template <Logic L>
std::pair<BasicContext<L>, BasicFormula<L>> split_at(const BasicFormula<L>& f,
                                                      const Address& address) {
  const Node& sub = node_at(f.node(), address);
  auto ctx = BasicContext<L>(replace_at(f.node(), address, make_node(NodeKind::kHole)));
  return {ctx, BasicFormula<L>(std::make_shared<const Node>(sub))};
}

/// Addresses of the outermost families over the naturals, in pre-order. With
/// `infinite_depth_only`, families of finite depth are skipped (and searched
/// no further, since their templates are not addressable).
std::vector<Address> infinite_families(const Node& root, bool infinite_depth_only);

/// Every replacement of the family at `address` by the same template over a
/// non-empty J subset of {0..bound}, in order of the bitmask of J. Throws
/// Error if the address does not name a family over the naturals.
std::vector<NodePtr> finite_subconjunctions(const Node& root, const Address& address,
                                            std::size_t bound);

template <Logic L>
std::vector<BasicFormula<L>> finite_subconjunctions(const BasicFormula<L>& f,
                                                    const Address& address, std::size_t bound) {
  std::vector<BasicFormula<L>> out;
  for (auto& n : finite_subconjunctions(f.node(), address, bound)) out.emplace_back(std::move(n));
  return out;
}

/// Number of negation nodes, with sharing unfolded.
std::size_t negation_count(const Node& node);
/// Number of nodes, with sharing unfolded; saturates at kInfinite.
std::size_t tree_size(const Node& node);

}  // namespace hml
