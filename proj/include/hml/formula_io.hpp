#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "hml/formula.hpp"

namespace hml {

/// Canonical text: `T`, `F`, `<a> phi`, `[a] phi`, `not phi`, `and(phi, ...)`,
/// `or(phi, ...)`, `AND{n in N} tpl`, `AND{n in {0,2,5}} tpl`, `OR{...} tpl`,
/// powers `<a>^n phi` and `[a]^n phi`, and `[]` for a hole.
std::string to_string(const Node& node);

template <Logic L, Role R>
std::string to_string(const detail::Syntax<L, R>& f) {
  return to_string(f.node());
}

template <Logic L, Role R>
std::ostream& operator<<(std::ostream& out, const detail::Syntax<L, R>& f) {
  return out << to_string(f.node());
}

/// Whitespace-insensitive. Throws ParseError with line and column.
Formula parse_formula(const std::string& text);
PosFormula parse_pos_formula(const std::string& text);
Context parse_context(const std::string& text);
PosContext parse_pos_context(const std::string& text);
Template parse_template(const std::string& text);
PosTemplate parse_pos_template(const std::string& text);

/// HML when the text has no HML+-only construct, HML+ otherwise.
std::variant<Formula, PosFormula> parse_any_formula(const std::string& text);

}  // namespace hml
