#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hml {

/// An action label. Equality is exact text equality.
using Action = std::string;

/// Finite, duplicate-free, sorted set of actions.
using Alphabet = std::vector<Action>;

/// Sentinel for "no bound": infinite formula depth, unbounded projection budget.
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input that does not match a grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

bool is_identifier(std::string_view text);

/// Sorted union without duplicates.
Alphabet make_alphabet(std::vector<Action> actions);
Alphabet merge_alphabets(const Alphabet& lhs, const Alphabet& rhs);

/// Saturating arithmetic on depths and budgets, kInfinite absorbs.
constexpr std::size_t saturating_add(std::size_t lhs, std::size_t rhs) {
  return (lhs == kInfinite || rhs == kInfinite || lhs > kInfinite - rhs) ? kInfinite : lhs + rhs;
}

}  // namespace hml
