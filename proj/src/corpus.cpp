#include "hml/corpus.hpp"

#include <algorithm>

namespace hml {

std::vector<const CorpusEntry*> Corpus::finite() const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : entries) {
    if (e.system.is_finite()) out.push_back(&e);
  }
  return out;
}

const CorpusEntry& Corpus::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw Error("no corpus entry named '" + name + "'");
}

std::size_t Corpus::max_states() const {
  std::size_t n = 0;
  for (const auto* e : finite()) n = std::max(n, e->system.finite().state_count());
  return n;
}

Corpus standard_corpus(std::size_t max_term_size) {
  Corpus c;
  for (const auto& t : enumerate_terms({"a", "b"}, max_term_size)) {
    c.entries.push_back({to_string(t), from_term(t)});
  }
  c.entries.push_back({"a-loop", a_loop()});
  c.entries.push_back({"deadlock", deadlock()});
  c.entries.push_back({"a-cycle-2", FiniteLts(2, {{0, "a", 1}, {1, "a", 0}}, 0)});
  c.entries.push_back({"ab-cycle", FiniteLts(2, {{0, "a", 1}, {1, "b", 0}}, 0)});
  c.entries.push_back({"a-loop-exit-b", FiniteLts(2, {{0, "a", 0}, {0, "b", 1}}, 0)});
  c.entries.push_back(
      {"a-lasso", FiniteLts(3, {{0, "a", 1}, {0, "a", 2}, {2, "a", 2}, {1, "b", 1}}, 0)});
  c.entries.push_back({"@left-counterexample", left_counterexample()});
  c.entries.push_back({"@right-counterexample", right_counterexample()});
  return c;
}

ProcessTerm random_term(Rng& rng, const Alphabet& alphabet, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(max_size, 1));
  std::uniform_int_distribution<std::size_t> action_dist(0, alphabet.size() - 1);
  auto build = [&](auto& self, std::size_t budget) -> ProcessTerm {
    if (budget == 0) return ProcessTerm::nil();
    // Split the prefixes among 1..3 summands.
    std::uniform_int_distribution<std::size_t> parts_dist(1, std::min<std::size_t>(budget, 3));
    std::size_t parts = parts_dist(rng);
    std::vector<ProcessTerm> summands;
    std::size_t left = budget;
    for (std::size_t i = 0; i < parts; ++i) {
      std::size_t share = i + 1 == parts ? left : 1 + rng() % (left - (parts - i) + 1);
      left -= share;
      summands.push_back(ProcessTerm::prefix(alphabet[action_dist(rng)], self(self, share - 1)));
    }
    return summands.size() == 1 ? summands.front() : ProcessTerm::choice(std::move(summands));
  };
  return build(build, size_dist(rng));
}

FiniteLts random_lts(Rng& rng, const Alphabet& alphabet, std::size_t max_states, double density) {
  std::uniform_int_distribution<std::size_t> count_dist(1, std::max<std::size_t>(max_states, 1));
  std::bernoulli_distribution edge(density);
  std::size_t n = count_dist(rng);
  std::vector<Transition> transitions;
  for (State s = 0; s < n; ++s) {
    for (const auto& a : alphabet) {
      for (State t = 0; t < n; ++t) {
        if (edge(rng)) transitions.push_back({s, a, t});
      }
    }
  }
  return FiniteLts(n, std::move(transitions), 0);
}

}  // namespace hml
