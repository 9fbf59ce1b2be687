#include "hml/formula_io.hpp"

#include <cctype>
#include <ostream>

namespace hml {

namespace {

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::kTop:
      out += 'T';
      return;
    case NodeKind::kBot:
      out += 'F';
      return;
    case NodeKind::kHole:
      out += "[]";
      return;
    case NodeKind::kNot:
      out += "not ";
      print(n.child(), out);
      return;
    case NodeKind::kDiamond:
    case NodeKind::kPower:
      out += '<';
      out += n.action;
      out += n.kind == NodeKind::kPower ? ">^n " : "> ";
      print(n.child(), out);
      return;
    case NodeKind::kBox:
    case NodeKind::kBoxPower:
      out += '[';
      out += n.action;
      out += n.kind == NodeKind::kBoxPower ? "]^n " : "] ";
      print(n.child(), out);
      return;
    case NodeKind::kAnd:
    case NodeKind::kOr:
      if (n.family) {
        out += n.kind == NodeKind::kAnd ? "AND{n in " : "OR{n in ";
        if (n.family->is_naturals()) {
          out += 'N';
        } else {
          out += '{';
          const auto& m = n.family->members();
          for (std::size_t i = 0; i < m.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(m[i]);
          }
          out += '}';
        }
        out += "} ";
        print(n.child(), out);
        return;
      }
      out += n.kind == NodeKind::kAnd ? "and(" : "or(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += ", ";
        print(*n.children[i], out);
      }
      out += ')';
      return;
  }
}

class FormulaParser {
 public:
  /// `open_family`: the text is a template, so its own power needs no enclosing family.
  explicit FormulaParser(const std::string& text, bool open_family = false)
      : text_(text), families_(open_family ? 1 : 0) {}

  NodePtr parse() {
    NodePtr n = formula();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return n;
  }

 private:
  NodePtr formula() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = formula();
      expect(')');
      return inner;
    }
    if (c == '<') {
      ++pos_;
      Action a = identifier();
      expect('>');
      return modal(NodeKind::kDiamond, NodeKind::kPower, std::move(a));
    }
    if (c == '[') {
      ++pos_;
      skip();
      if (peek(']')) {
        ++pos_;
        return make_node(NodeKind::kHole);
      }
      Action a = identifier();
      expect(']');
      return modal(NodeKind::kBox, NodeKind::kBoxPower, std::move(a));
    }
    std::size_t start = pos_;
    std::string word = identifier();
    if (word == "T") return make_node(NodeKind::kTop);
    if (word == "F") return make_node(NodeKind::kBot);
    if (word == "not") return make_node(NodeKind::kNot, {}, {formula()});
    if (word == "and" || word == "or") {
      expect('(');
      std::vector<NodePtr> kids;
      skip();
      if (!peek(')')) {
        kids.push_back(formula());
        while (skip(), peek(',')) {
          ++pos_;
          kids.push_back(formula());
        }
      }
      expect(')');
      return make_node(word == "and" ? NodeKind::kAnd : NodeKind::kOr, {}, std::move(kids));
    }
    if (word == "AND" || word == "OR") {
      expect('{');
      keyword("n");
      keyword("in");
      skip();
      IndexSet indices = IndexSet::naturals();
      if (peek('{')) {
        ++pos_;
        std::vector<std::size_t> members;
        skip();
        if (!peek('}')) {
          members.push_back(number());
          while (skip(), peek(',')) {
            ++pos_;
            members.push_back(number());
          }
        }
        expect('}');
        if (members.empty()) fail("empty index set");
        indices = IndexSet::of(std::move(members));
      } else {
        keyword("N");
      }
      expect('}');
      ++families_;
      NodePtr tpl = formula();
      --families_;
      return make_node(word == "AND" ? NodeKind::kAnd : NodeKind::kOr, {}, {tpl}, indices);
    }
    pos_ = start;
    fail("unknown token '" + word + "'");
  }

  NodePtr modal(NodeKind plain, NodeKind power, Action a) {
    skip();
    if (peek('^')) {
      std::size_t at = pos_;
      ++pos_;
      keyword("n");
      if (families_ == 0) {
        pos_ = at;
        fail("a power needs an enclosing AND{...} or OR{...}");
      }
      return make_node(power, std::move(a), {formula()});
    }
    return make_node(plain, std::move(a), {formula()});
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  std::size_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("index too large");
    return std::stoull(text_.substr(start, pos_ - start));
  }

  void keyword(const std::string& word) {
    std::size_t start = pos_;
    skip();
    start = pos_;
    if (identifier() != word) {
      pos_ = start;
      fail("expected '" + word + "'");
    }
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t families_ = 0;
};

template <class T>
T typed(const std::string& text, bool open_family = false) {
  NodePtr n = FormulaParser(text, open_family).parse();
  try {
    return T(n);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

bool uses(const Node& n, bool positive_only_kinds) {
  bool hit = positive_only_kinds
                 ? (n.kind == NodeKind::kBot || n.kind == NodeKind::kBox ||
                    n.kind == NodeKind::kOr || n.kind == NodeKind::kBoxPower)
                 : n.kind == NodeKind::kNot;
  if (hit) return true;
  for (const auto& c : n.children) {
    if (uses(*c, positive_only_kinds)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(const Node& node) {
  std::string out;
  print(node, out);
  return out;
}

Formula parse_formula(const std::string& text) { return typed<Formula>(text); }
PosFormula parse_pos_formula(const std::string& text) { return typed<PosFormula>(text); }
Context parse_context(const std::string& text) { return typed<Context>(text); }
PosContext parse_pos_context(const std::string& text) { return typed<PosContext>(text); }
Template parse_template(const std::string& text) { return typed<Template>(text, true); }
PosTemplate parse_pos_template(const std::string& text) { return typed<PosTemplate>(text, true); }

std::variant<Formula, PosFormula> parse_any_formula(const std::string& text) {
  NodePtr n = FormulaParser(text).parse();
  bool plus = uses(*n, true);
  bool minus = uses(*n, false);
  if (plus && minus) throw ParseError("mixes negation with F, or, or box", 1, 1);
  try {
    if (plus) return PosFormula(n);
    return Formula(n);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace hml
