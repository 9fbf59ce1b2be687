#include "hml/action.hpp"

#include <algorithm>
#include <cctype>

namespace hml {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Alphabet make_alphabet(std::vector<Action> actions) {
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  return actions;
}

Alphabet merge_alphabets(const Alphabet& lhs, const Alphabet& rhs) {
  Alphabet out;
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

}  // namespace hml
