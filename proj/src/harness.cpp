#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"

namespace ilc {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCoherent: return "coherent";
    case Verdict::kIncoherent: return "incoherent";
    case Verdict::kSkippedFuel: return "skipped-fuel";
    case Verdict::kSkippedStuck: return "skipped-stuck";
  }
  return "?";
}

bool SuiteSummary::all_structured_rules_fired() const {
  for (std::size_t i = 0; i < kStructuredRuleCount; ++i) {
    if (rules.fired[i] == 0) return false;
  }
  return true;
}

TrialReport run_trial(std::uint64_t seed, const Config& cfg, RuleStats* stats) {
  FreshNameScope names;
  TrialReport r;
  r.seed = seed;
  r.term = gen_term(seed, cfg.size);
  r.delta = gen_delta(mix_seed(seed, 0), r.term, std::max<std::uint64_t>(cfg.size / 2, 1));
  r.src_outcome = eval(src(r.delta), cfg.fuel);
  r.tgt_outcome = eval(tgt(r.delta), cfg.fuel);
  auto fuel_out = [](const EvalOutcome& o) {
    return std::holds_alternative<OutOfFuel>(o);
  };
  auto stuck = [](const EvalOutcome& o) { return std::holds_alternative<Stuck>(o); };
  if (fuel_out(r.src_outcome) || fuel_out(r.tgt_outcome)) {
    r.verdict = Verdict::kSkippedFuel;
    return r;
  }
  if (stuck(r.src_outcome) || stuck(r.tgt_outcome)) {
    r.verdict = Verdict::kSkippedStuck;
    return r;
  }
  RuleStats local;
  try {
    r.value_delta = delta_eval(r.delta, cfg.fuel * kDeltaFuelFactor, &local);
  } catch (const DeltaEvalError& e) {
    r.delta_error = e.what();
    // Both runs finished within budget, so only running out is excusable.
    r.verdict = e.cause() == DeltaEvalError::Cause::kOutOfFuel
                    ? Verdict::kSkippedFuel
                    : Verdict::kIncoherent;
    return r;
  } catch (const Error& e) {
    r.delta_error = e.what();
    r.verdict = Verdict::kIncoherent;
    return r;
  }
  const Term& v = std::get<Val>(r.src_outcome).value;
  const Term& v2 = std::get<Val>(r.tgt_outcome).value;
  const bool ok =
      alpha_eq(src(*r.value_delta), v) && alpha_eq(tgt(*r.value_delta), v2);
  r.verdict = ok ? Verdict::kCoherent : Verdict::kIncoherent;
  if (ok && stats != nullptr) *stats += local;
  return r;
}

SuiteSummary run_coherence_suite(const Config& cfg) {
  SuiteSummary s;
  s.trials = cfg.trials;
  s.reports.resize(cfg.trials);
  std::vector<RuleStats> stats(cfg.trials);
  unsigned threads = cfg.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(cfg.trials, 1)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < cfg.trials; i = next++) {
      s.reports[i] = run_trial(mix_seed(cfg.seed, i), cfg, &stats[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    switch (s.reports[i].verdict) {
      case Verdict::kCoherent: ++s.coherent; break;
      case Verdict::kIncoherent: ++s.incoherent; break;
      case Verdict::kSkippedFuel: ++s.skipped_fuel; break;
      case Verdict::kSkippedStuck: ++s.skipped_stuck; break;
    }
    s.rules += stats[i];
  }
  return s;
}

Json to_json(const TrialReport& r) {
  Json j = {{"seed", r.seed},
            {"verdict", verdict_name(r.verdict)},
            {"term", to_json(r.term)},
            {"delta", to_json(r.delta)},
            {"src_outcome", to_json(r.src_outcome)},
            {"tgt_outcome", to_json(r.tgt_outcome)}};
  if (r.value_delta) j["value_delta"] = to_json(*r.value_delta);
  if (!r.delta_error.empty()) j["delta_error"] = r.delta_error;
  return j;
}

Json to_json(const SuiteSummary& s) {
  Json rules = Json::object();
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    rules[std::string(rule_name(static_cast<Rule>(i)))] = s.rules.fired[i];
  }
  Json failures = Json::array();
  Json verdicts = Json::array();
  for (const TrialReport& r : s.reports) {
    verdicts.push_back({{"seed", r.seed}, {"verdict", verdict_name(r.verdict)}});
    if (r.verdict == Verdict::kIncoherent) failures.push_back(to_json(r));
  }
  return {{"trials", s.trials},
          {"coherent", s.coherent},
          {"incoherent", s.incoherent},
          {"skipped_fuel", s.skipped_fuel},
          {"skipped_stuck", s.skipped_stuck},
          {"all_structured_rules_fired", s.all_structured_rules_fired()},
          {"rules", rules},
          {"verdicts", verdicts},
          {"counterexamples", failures}};
}

std::string format_summary(const SuiteSummary& s) {
  std::ostringstream out;
  out << "trials " << s.trials << ": " << s.coherent << " coherent, "
      << s.incoherent << " incoherent, " << s.skipped_fuel
      << " skipped (fuel), " << s.skipped_stuck << " skipped (stuck)\n";
  out << "rule coverage (coherent trials):\n";
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    out << "  " << rule_name(static_cast<Rule>(i)) << ' ' << s.rules.fired[i];
    if (i < kStructuredRuleCount && s.rules.fired[i] == 0) out << "  (never)";
    out << '\n';
  }
  for (const TrialReport& r : s.reports) {
    if (r.verdict != Verdict::kIncoherent) continue;
    out << "incoherent trial, seed " << r.seed << "\n  delta: "
        << pretty_delta(r.delta) << '\n';
    if (r.value_delta) out << "  result: " << pretty_delta(*r.value_delta) << '\n';
    if (!r.delta_error.empty()) out << "  error: " << r.delta_error << '\n';
  }
  return out.str();
}

}  // namespace ilc
