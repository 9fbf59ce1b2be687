#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "hml/lts.hpp"

namespace hml {

namespace {

class LineCursor {
 public:
  LineCursor(const std::string& line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(const std::string& word) {
    skip();
    if (line_.compare(pos_, word.size(), word) != 0) fail("expected '" + word + "'");
    pos_ += word.size();
  }

  std::size_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(line_.substr(start, pos_ - start));
  }

  /// Quoted labels are taken verbatim; unquoted ones run up to the next comma.
  std::string label() {
    skip();
    if (pos_ < line_.size() && line_[pos_] == '"') {
      std::size_t close = line_.find('"', pos_ + 1);
      if (close == std::string::npos) fail("unterminated label");
      std::string out = line_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return out;
    }
    std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ',') ++pos_;
    std::string out = line_.substr(start, pos_ - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected a label");
    return out;
  }

  void end() {
    skip();
    if (pos_ != line_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_no_, pos_ + 1);
  }

 private:
  const std::string& line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

FiniteLts read_aut(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) break;
  }
  if (blank(line)) throw ParseError("missing 'des' header", line_no + 1, 1);

  LineCursor header(line, line_no);
  header.expect_word("des");
  header.expect('(');
  std::size_t root = header.number();
  header.expect(',');
  std::size_t transition_count = header.number();
  header.expect(',');
  std::size_t state_count = header.number();
  header.expect(')');
  header.end();
  if (state_count == 0) header.fail("state count must be positive");
  if (root >= state_count) header.fail("root is not a state");

  std::vector<Transition> transitions;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    LineCursor cur(line, line_no);
    cur.expect('(');
    std::size_t from = cur.number();
    cur.expect(',');
    std::string label = cur.label();
    cur.expect(',');
    std::size_t to = cur.number();
    cur.expect(')');
    cur.end();
    if (from >= state_count || to >= state_count) cur.fail("state out of range");
    transitions.push_back(Transition{from, std::move(label), to});
  }
  if (transitions.size() != transition_count) {
    throw ParseError("header announces " + std::to_string(transition_count) +
                         " transitions, found " + std::to_string(transitions.size()),
                     1, 1);
  }
  return FiniteLts(state_count, std::move(transitions), root);
}

FiniteLts parse_aut(const std::string& text) {
  std::istringstream in(text);
  return read_aut(in);
}

void write_aut(std::ostream& out, const FiniteLts& lts) {
  out << "des (" << lts.root() << ", " << lts.transitions().size() << ", " << lts.state_count()
      << ")\n";
  for (const auto& t : lts.transitions()) {
    out << '(' << t.from << ", \"" << t.action << "\", " << t.to << ")\n";
  }
}

std::string to_aut(const FiniteLts& lts) {
  std::ostringstream out;
  write_aut(out, lts);
  return out.str();
}

}  // namespace hml
