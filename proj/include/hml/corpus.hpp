#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hml/lts.hpp"
#include "hml/process_term.hpp"

namespace hml {

struct CorpusEntry {
  std::string name;
  TransitionSystem system;
};

/// Test systems: every term of size <= 4 over {a, b}, the a-loop, the
/// deadlock, a few small cyclic systems, and both non-image-finite fixtures.
struct Corpus {
  std::vector<CorpusEntry> entries;

  /// Entries whose system is Finite, in corpus order.
  std::vector<const CorpusEntry*> finite() const;
  const CorpusEntry& at(const std::string& name) const;
  /// Largest state count among Finite entries.
  std::size_t max_states() const;
};

Corpus standard_corpus(std::size_t max_term_size = 4);

using Rng = std::mt19937_64;

/// Random acyclic term with 1..max_size prefixes.
ProcessTerm random_term(Rng& rng, const Alphabet& alphabet, std::size_t max_size);

/// Random system with 1..max_states states, possibly cyclic. Each possible
/// transition is present with probability `density`.
FiniteLts random_lts(Rng& rng, const Alphabet& alphabet, std::size_t max_states,
                     double density = 0.3);

}  // namespace hml
