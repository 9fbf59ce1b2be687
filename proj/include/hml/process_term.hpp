#pragma once

#include <string>
#include <vector>

#include "hml/action.hpp"
#include "hml/lts.hpp"

namespace hml {

/// Finite process term: 0, a.P, or a non-empty choice P1 + ... + Pk.
class ProcessTerm {
 public:
  enum class Kind { kNil, kPrefix, kChoice };

  static ProcessTerm nil();
  static ProcessTerm prefix(Action a, ProcessTerm body);
  static ProcessTerm choice(std::vector<ProcessTerm> alternatives);

  Kind kind() const { return kind_; }
  const Action& action() const { return action_; }
  const std::vector<ProcessTerm>& children() const { return children_; }

  /// Number of prefix operators.
  std::size_t size() const;

  friend bool operator==(const ProcessTerm&, const ProcessTerm&) = default;

 private:
  ProcessTerm(Kind kind, Action action, std::vector<ProcessTerm> children);

  Kind kind_ = Kind::kNil;
  Action action_;
  std::vector<ProcessTerm> children_;
};

/// Canonical LTS of a term. States are numbered depth-first, left to right;
/// the root is state 0.
FiniteLts from_term(const ProcessTerm& term);

/// Grammar: `0`, `a.P`, `P + Q`, parentheses. `+` is right-associative and
/// `.` binds tighter than `+`.
ProcessTerm parse_term(const std::string& text);
std::string to_string(const ProcessTerm& term);

/// Every term with at most `max_size` prefixes over `alphabet`, up to
/// reordering of summands. Summands are sorted, so each behaviour appears once.
std::vector<ProcessTerm> enumerate_terms(const Alphabet& alphabet, std::size_t max_size);

}  // namespace hml
