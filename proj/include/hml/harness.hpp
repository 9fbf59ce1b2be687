#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hml/corpus.hpp"
#include "hml/formula.hpp"
#include "hml/spectrum.hpp"

namespace hml {

enum class Verdict { kPass, kFail, kVacuous };

std::string_view verdict_name(Verdict v);

/// The systems, states and formula behind a verdict.
struct Witness {
  std::string left;     // system:state
  std::string right;    // system:state, empty for single-state witnesses
  std::string formula;  // canonical text, empty if none
  std::string detail;

  std::string to_string() const;
};

struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::kPass;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Witness> witness;
  std::string note;
};

/// `name verdict trials seed [witness]`
std::string format_line(const CheckReport& r);
/// All reports with their witnesses as a JSON array.
std::string reports_to_json(const std::vector<CheckReport>& reports);

// Random syntax ------------------------------------------------------------------

namespace gen {

struct Options {
  std::size_t depth = 3;
  double negation = 0.3;
  /// Families over N whose template carries a power (infinite depth).
  bool power_families = false;
  /// Families of finite depth: constant templates over N, finite index sets.
  bool finite_depth_families = false;
};

Formula formula(Rng& rng, const Alphabet& alphabet, const Options& opts);
PosFormula pos_formula(Rng& rng, const Alphabet& alphabet, const Options& opts);
Context context(Rng& rng, const Alphabet& alphabet, const Options& opts);
PosContext pos_context(Rng& rng, const Alphabet& alphabet, const Options& opts);

/// E[<a>^n T] for a random context E of depth <= depth; antitone or isotone.
Template power_template(Rng& rng, const Alphabet& alphabet, std::size_t depth, double negation);
/// E[<a>^n T] or E[[a]^n F] for a random positive context E.
PosTemplate pos_power_template(Rng& rng, const Alphabet& alphabet, std::size_t depth);

}  // namespace gen

// Checks ---------------------------------------------------------------------

/// The non-image-finite pair: the left root fails <a>(AND{n in N} <a>^n T)
/// and satisfies it for every non-empty finite J of {0..max_index}; the right
/// root satisfies it.
CheckReport check_counterexample_reproduction(std::size_t max_index = 8);

CheckReport check_conjunction_compactness(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t trials = 1000);
CheckReport check_disjunction_compactness(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t trials = 1000);
CheckReport check_negation_compactness(const Corpus& corpus, std::uint64_t seed,
                                       std::size_t trials = 1000);

/// A set O given by generators. When `closed`, O also contains every
/// D[AND{n in J} tpl] for a generator D[AND{n in N} tpl] and finite J.
struct OSpec {
  std::string name;
  std::vector<Formula> generators;
  bool closed = true;
};

/// O built from the power family: AND{n in N} <a>^n T for each action,
/// also under <b> and under negation, closed under finite subfamilies.
OSpec power_family_o(const Alphabet& alphabet);

/// ~O against ~O_FIN (or ~O_FDP) on all pairs of `systems` roots. Pass when
/// they coincide. Vacuous when O is not closed or a system is not Finite;
/// the witness then records where the two relations diverge, if anywhere.
CheckReport check_thm_hml(const OSpec& o, const std::vector<const CorpusEntry*>& systems,
                          LambdaMode mode, std::size_t index_bound);

/// Inverted assertions: O = {AND{n in N} <a>^n T} separates the a-loop from
/// the deadlock while O_FIN is empty, and the closed O over <a>(AND ...)
/// separates the fixture roots while O_FIN does not. Pass iff both diverge.
CheckReport check_thm_hml_controls(std::size_t max_index = 8);

CheckReport check_finite_depth_projection(const Corpus& corpus, std::uint64_t seed,
                                          std::size_t formulas = 150);
CheckReport check_cut_lemma(const Corpus& corpus, std::uint64_t seed, std::size_t formulas = 150);

/// AIP for the characterization of `sem` with depth bound n_max - 1.
CheckReport check_aip(Semantics sem, const Corpus& corpus, std::size_t n_max);

/// AIP for an explicit O. Vacuous when O has a member of infinite depth; the
/// witness then records a violating pair if one exists.
CheckReport check_aip(const std::string& name, const std::vector<Formula>& o,
                      const std::vector<const CorpusEntry*>& systems, std::size_t n_max);

/// The a-loop/deadlock violation for O = {AND{n in N} <a>^n T}. Pass iff found.
CheckReport check_aip_non_fdp_control(std::size_t n_max);

/// ~O against ~O_1 with O_1 the cut images (n <= n_max). Vacuous with the
/// violating pair when the compositionality probe fails.
CheckReport check_necessity(Semantics sem, const Corpus& corpus, std::size_t n_max);

CheckReport check_reachability_soundness(const Corpus& corpus, std::size_t n_max);

/// s |= phi iff s |= P(phi), and the complement involution, over all corpus states.
CheckReport check_translation_coherence(const Corpus& corpus, std::uint64_t seed,
                                        std::size_t formulas = 400);
CheckReport check_context_lemma(std::uint64_t seed, std::size_t trials = 500);

/// Bisimulation characterization with bound |S1|+|S2| against partition refinement.
CheckReport check_hennessy_milner(const Corpus& corpus, std::uint64_t seed,
                                  std::size_t random_pairs = 200);

/// Every supported characterization against its direct decider.
CheckReport check_spectrum_agreement(const Corpus& corpus, std::uint64_t seed,
                                     std::size_t random_pairs = 200);
CheckReport check_spectrum_inclusions(const Corpus& corpus, std::uint64_t seed,
                                      std::size_t random_pairs = 200);

/// Every check above, in a fixed order.
std::vector<CheckReport> run_all(std::uint64_t seed);

}  // namespace hml
