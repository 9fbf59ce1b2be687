#include "hml/process_term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace hml {

ProcessTerm::ProcessTerm(Kind kind, Action action, std::vector<ProcessTerm> children)
    : kind_(kind), action_(std::move(action)), children_(std::move(children)) {}

ProcessTerm ProcessTerm::nil() { return ProcessTerm(Kind::kNil, {}, {}); }

ProcessTerm ProcessTerm::prefix(Action a, ProcessTerm body) {
  if (!is_identifier(a)) throw Error("invalid action '" + a + "'");
  return ProcessTerm(Kind::kPrefix, std::move(a), {std::move(body)});
}

ProcessTerm ProcessTerm::choice(std::vector<ProcessTerm> alternatives) {
  if (alternatives.empty()) throw Error("a choice needs at least one alternative");
  return ProcessTerm(Kind::kChoice, {}, std::move(alternatives));
}

std::size_t ProcessTerm::size() const {
  std::size_t n = kind_ == Kind::kPrefix ? 1 : 0;
  for (const auto& c : children_) n += c.size();
  return n;
}

namespace {

void collect_menu(const ProcessTerm& t, std::vector<const ProcessTerm*>& menu) {
  switch (t.kind()) {
    case ProcessTerm::Kind::kNil:
      break;
    case ProcessTerm::Kind::kPrefix:
      menu.push_back(&t);
      break;
    case ProcessTerm::Kind::kChoice:
      for (const auto& c : t.children()) collect_menu(c, menu);
      break;
  }
}

State build(const ProcessTerm& t, std::size_t& next, std::vector<Transition>& out) {
  State self = next++;
  std::vector<const ProcessTerm*> menu;
  collect_menu(t, menu);
  for (const ProcessTerm* p : menu) {
    State target = build(p->children().front(), next, out);
    out.push_back(Transition{self, p->action(), target});
  }
  return self;
}

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  ProcessTerm parse() {
    ProcessTerm t = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  ProcessTerm sum() {
    ProcessTerm left = prefix();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      ProcessTerm right = sum();
      return ProcessTerm::choice({std::move(left), std::move(right)});
    }
    return left;
  }

  ProcessTerm prefix() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return ProcessTerm::nil();
    }
    if (c == '(') {
      ++pos_;
      ProcessTerm inner = sum();
      skip();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      Action a = text_.substr(start, pos_ - start);
      skip();
      expect('.');
      return ProcessTerm::prefix(std::move(a), prefix());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
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
};

void print(const ProcessTerm& t, std::string& out) {
  switch (t.kind()) {
    case ProcessTerm::Kind::kNil:
      out += '0';
      return;
    case ProcessTerm::Kind::kPrefix: {
      out += t.action();
      out += '.';
      const ProcessTerm& body = t.children().front();
      bool wrap = body.kind() == ProcessTerm::Kind::kChoice && body.children().size() > 1;
      if (wrap) out += '(';
      print(body, out);
      if (wrap) out += ')';
      return;
    }
    case ProcessTerm::Kind::kChoice:
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) out += " + ";
        const ProcessTerm& c = t.children()[i];
        // Right-associative: only a choice on the left needs parentheses.
        bool wrap = c.kind() == ProcessTerm::Kind::kChoice && c.children().size() > 1 &&
                    i + 1 < t.children().size();
        if (wrap) out += '(';
        print(c, out);
        if (wrap) out += ')';
      }
      return;
  }
}

}  // namespace

FiniteLts from_term(const ProcessTerm& term) {
  std::size_t next = 0;
  std::vector<Transition> transitions;
  build(term, next, transitions);
  // Order transitions by source so the numbering reads top-down.
  std::stable_sort(transitions.begin(), transitions.end(),
                   [](const Transition& x, const Transition& y) { return x.from < y.from; });
  return FiniteLts(next, std::move(transitions), 0);
}

ProcessTerm parse_term(const std::string& text) { return TermParser(text).parse(); }

std::string to_string(const ProcessTerm& term) {
  std::string out;
  print(term, out);
  return out;
}

std::vector<ProcessTerm> enumerate_terms(const Alphabet& alphabet, std::size_t max_size) {
  // by_size[n] holds the canonical terms with exactly n prefixes; summands of a
  // canonical term are canonical prefixes listed in non-decreasing key order.
  struct Summand {
    std::string key;
    ProcessTerm term;
  };
  std::vector<std::vector<ProcessTerm>> by_size(max_size + 1);
  std::vector<std::vector<Summand>> prefixes(max_size + 1);
  by_size[0].push_back(ProcessTerm::nil());

  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const auto& a : alphabet) {
      for (const auto& body : by_size[n - 1]) {
        ProcessTerm p = ProcessTerm::prefix(a, body);
        prefixes[n].push_back(Summand{to_string(p), p});
      }
    }
    std::sort(prefixes[n].begin(), prefixes[n].end(),
              [](const Summand& x, const Summand& y) { return x.key < y.key; });

    // Multisets of prefixes whose sizes add up to n, keys non-decreasing.
    std::vector<std::vector<const Summand*>> sums;
    std::vector<const Summand*> current;
    std::function<void(std::size_t, const std::string*)> extend = [&](std::size_t remaining,
                                                                       const std::string* floor) {
      if (remaining == 0) {
        sums.push_back(current);
        return;
      }
      for (std::size_t k = 1; k <= remaining; ++k) {
        for (const auto& s : prefixes[k]) {
          if (floor != nullptr && s.key < *floor) continue;
          current.push_back(&s);
          extend(remaining - k, &s.key);
          current.pop_back();
        }
      }
    };
    extend(n, nullptr);

    // The floor compares keys across sizes, so sort each sum and deduplicate.
    std::map<std::string, ProcessTerm> unique;
    for (auto& sum : sums) {
      std::sort(sum.begin(), sum.end(),
                [](const Summand* x, const Summand* y) { return x->key < y->key; });
      std::vector<ProcessTerm> parts;
      std::string key;
      for (const Summand* s : sum) {
        parts.push_back(s->term);
        key += s->key + "|";
      }
      ProcessTerm t = parts.size() == 1 ? parts.front() : ProcessTerm::choice(std::move(parts));
      unique.emplace(key, std::move(t));
    }
    for (auto& [key, t] : unique) by_size[n].push_back(std::move(t));
  }

  std::vector<ProcessTerm> all;
  for (auto& group : by_size) {
    for (auto& t : group) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace hml
