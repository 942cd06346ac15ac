#ifndef ILC_HARNESS_HPP_
#define ILC_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilc/delta.hpp"
#include "ilc/eval.hpp"
#include "ilc/json.hpp"
#include "ilc/term.hpp"

namespace ilc {

// Derives the seed of the index-th independent stream (SplitMix64).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// A closed term of at most `size_bound` nodes, built from a simple type
// discipline so that evaluation rarely gets stuck; redexes are favoured.
Term gen_term(std::uint64_t seed, std::uint64_t size_bound);

// A delta with source alpha-equal to `e`. Targets stay closed when `e` is.
Delta gen_delta(std::uint64_t seed, const Term& e, std::uint64_t size_bound);

// A triple for the substitution square: `d` may mention `x` free on both
// sides, `dv` is a change between values.
struct SubstCase {
  Delta d;
  Delta dv;
  std::string x;
};
SubstCase gen_subst_case(std::uint64_t seed, std::uint64_t size_bound);

// Two coinitial deltas, the first compatible with the second.
std::pair<Delta, Delta> gen_compatible_pair(std::uint64_t seed,
                                            std::uint64_t size_bound);

struct Config {
  std::uint64_t fuel = 512;
  std::uint64_t trials = 2000;
  std::uint64_t size = 40;
  std::uint64_t seed = 1;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// Delta evaluation may replay parts of both runs, so it gets this many times
// the baseline budget.
inline constexpr std::uint64_t kDeltaFuelFactor = 4;

enum class Verdict { kCoherent, kIncoherent, kSkippedFuel, kSkippedStuck };
std::string_view verdict_name(Verdict v);

struct TrialReport {
  std::uint64_t seed = 0;
  Term term = Term::unit();
  Delta delta = Delta::eps(Term::unit());
  EvalOutcome src_outcome = Val{Term::unit()};
  EvalOutcome tgt_outcome = Val{Term::unit()};
  std::optional<Delta> value_delta;
  std::string delta_error;
  Verdict verdict = Verdict::kSkippedStuck;
};

struct SuiteSummary {
  std::uint64_t trials = 0;
  std::uint64_t coherent = 0;
  std::uint64_t incoherent = 0;
  std::uint64_t skipped_fuel = 0;
  std::uint64_t skipped_stuck = 0;
  // Rule firings, counted over coherent trials only.
  RuleStats rules;
  std::vector<TrialReport> reports;

  bool all_structured_rules_fired() const;
};

// One trial, fully determined by `seed`.
TrialReport run_trial(std::uint64_t seed, const Config& cfg,
                      RuleStats* stats = nullptr);
// Trial i uses mix_seed(cfg.seed, i). Reports are in trial order.
SuiteSummary run_coherence_suite(const Config& cfg);

Json to_json(const TrialReport& r);
// Full reports are included for incoherent trials only.
Json to_json(const SuiteSummary& s);
std::string format_summary(const SuiteSummary& s);

// Every closed term of at most `max_size` nodes over unit, inl, inr, pairs,
// lambdas, application and bound variables. Binders are named by depth.
std::vector<Term> enumerate_closed_terms(std::size_t max_size);
// Every delta of size at most `max_size` with source `e` (closed), with
// frames and replacement targets drawn from the same grammar.
std::vector<Delta> enumerate_deltas(const Term& e, std::size_t max_size);

}  // namespace ilc

#endif  // ILC_HARNESS_HPP_
