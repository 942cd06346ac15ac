// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ilc/algebra.hpp"
#include "ilc/delta.hpp"
#include "ilc/eval.hpp"
#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"
#include "oracles.hpp"

using namespace ilc;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Differential coherence suite at the documented settings.
Result coherence_suite() {
  Config cfg;
  cfg.trials = 2000;
  cfg.seed = 1;
  cfg.fuel = 512;
  cfg.size = 40;
  SuiteSummary s = run_coherence_suite(cfg);
  std::size_t fired = 0;
  std::string missing;
  for (std::size_t i = 0; i < kStructuredRuleCount; ++i) {
    if (s.rules.fired[i] > 0) {
      ++fired;
    } else {
      missing += ' ';
      missing += rule_name(static_cast<Rule>(i));
    }
  }
  // Recheck every coherent verdict against the endpoint oracle.
  std::uint64_t recheck_failures = 0;
  for (const TrialReport& r : s.reports) {
    if (r.verdict != Verdict::kCoherent) continue;
    const Term& v = std::get<Val>(r.src_outcome).value;
    const Term& v2 = std::get<Val>(r.tgt_outcome).value;
    if (!oracle::alpha(src(*r.value_delta), v) ||
        !oracle::alpha(tgt(*r.value_delta), v2)) {
      ++recheck_failures;
    }
  }
  std::ostringstream d;
  d << s.coherent << "/" << s.trials << " coherent, " << s.incoherent
    << " incoherent, " << s.skipped_fuel << " skipped-fuel, " << s.skipped_stuck
    << " skipped-stuck; structured rules fired " << fired << "/"
    << kStructuredRuleCount;
  if (!missing.empty()) d << " (never:" << missing << ")";
  if (recheck_failures > 0) d << "; oracle recheck failures " << recheck_failures;
  return {s.incoherent == 0 && s.coherent >= 1200 && fired == kStructuredRuleCount &&
              recheck_failures == 0,
          d.str()};
}

// 2. apply(src d, d) = tgt d, and both endpoints agree with the judgment.
Result endpoint_soundness() {
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::uint64_t seed = mix_seed(2, i);
    Term e = gen_term(seed, 30);
    Delta d = gen_delta(mix_seed(seed, 7), e, 16);
    bool ok = apply(src(d), d) == tgt(d) && src(d) == oracle::source(d) &&
              tgt(d) == oracle::target(d) && oracle::alpha(src(d), e);
    bad += ok ? 0 : 1;
  }
  return {bad == 0, "2000 deltas, " + std::to_string(bad) + " failures"};
}

// 3. apply(e, diff(e, e')) is alpha-equal to e'.
Result diff_roundtrip() {
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::uint64_t seed = mix_seed(3, i);
    Term e = gen_term(seed, 30);
    // Half unrelated pairs, half pairs related by an edit.
    Term e2 = i % 2 == 0 ? gen_term(mix_seed(seed, 1), 30)
                         : tgt(gen_delta(mix_seed(seed, 2), e, 12));
    Delta d = diff(e, e2);
    bad += oracle::alpha(apply(e, d), e2) && oracle::alpha(oracle::source(d), e) ? 0 : 1;
  }
  return {bad == 0, "2000 pairs, " + std::to_string(bad) + " failures"};
}

// Replaces the sub-delta at pre-order position `target` by `with`.
Delta splice(const Delta& d, std::size_t& pos, std::size_t target,
             const Delta& with) {
  if (pos++ == target) return with;
  std::vector<Delta> kids;
  for (const Delta& c : d.children()) kids.push_back(splice(c, pos, target, with));
  return d.arity() == 0 ? d : d.with_children(kids);
}

void sites(const Delta& d, std::vector<Delta>& out) {
  out.push_back(d);
  for (const Delta& c : d.children()) sites(c, out);
}

// 4. Composition and each equation preserve endpoints.
Result equational_theory() {
  std::uint64_t compose_bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t seed = mix_seed(4, i);
    Term e = gen_term(seed, 30);
    Delta d1 = gen_delta(mix_seed(seed, 1), e, 12);
    Delta d2 = gen_delta(mix_seed(seed, 2), tgt(d1), 12);
    Delta c = compose(d1, d2);
    if (!oracle::alpha(src(c), src(d1)) || !oracle::alpha(tgt(c), tgt(d2))) {
      ++compose_bad;
    }
  }

  const std::vector<Context> frames = {
      Context(Term::inl(Term::slot())),
      Context(Term::pair(Term::slot(), Term::unit())),
      Context(Term::lam("q", Term::slot())),
      Context(Term::app(Term::lam("q", Term::var("q")), Term::slot())),
      Context(Term::inr(Term::pair(Term::unit(), Term::slot()))),
  };
  std::uint64_t rewrites = 0, rewrite_bad = 0, unmatched = 0, splice_bad = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::uint64_t seed = mix_seed(44, i);
    Term e = gen_term(seed, 24);
    Delta d = gen_delta(mix_seed(seed, 1), e, 10);
    std::vector<Delta> all;
    sites(d, all);
    for (std::size_t at = 0; at < all.size(); ++at) {
      const Delta& s = all[at];
      const Context& c = frames[(i + at) % frames.size()];
      const Delta eps_t = Delta::eps(tgt(s));
      for (Equation eq : kAllEquations) {
        Delta d1 = s, d2 = s;
        switch (eq) {
          case Equation::kEpsLeft: d1 = Delta::eps(src(s)); break;
          case Equation::kEpsRight: d2 = eps_t; break;
          case Equation::kInsDel:
            d1 = Delta::ins(c, s);
            d2 = Delta::del(c, eps_t);
            break;
          case Equation::kInsCong:
            d1 = Delta::ins(c, s);
            d2 = *spine(c, eps_t);
            break;
          case Equation::kCongDel:
            d1 = *spine(c, s);
            d2 = Delta::del(c, eps_t);
            break;
          case Equation::kInlBangInrBang:
            d1 = Delta::inl_bang(s);
            d2 = Delta::inr_bang(eps_t);
            break;
          case Equation::kInrBangInlBang:
            d1 = Delta::inr_bang(s);
            d2 = Delta::inl_bang(eps_t);
            break;
        }
        ++rewrites;
        auto r = rewrite(eq, d1, d2);
        if (!r) {
          ++unmatched;
          continue;
        }
        if (!oracle::alpha(src(*r), src(d1)) || !oracle::alpha(tgt(*r), tgt(d2))) {
          ++rewrite_bad;
          continue;
        }
        // Where the composite has the site's own endpoints, splice the
        // rewritten delta back in and recheck the whole delta.
        const bool same_ends = eq == Equation::kEpsLeft ||
                               eq == Equation::kEpsRight ||
                               eq == Equation::kInsDel;
        if (same_ends) {
          std::size_t pos = 0;
          Delta whole = splice(d, pos, at, *r);
          if (!oracle::alpha(src(whole), src(d)) ||
              !oracle::alpha(tgt(whole), tgt(d))) {
            ++splice_bad;
          }
        }
      }
    }
  }
  std::ostringstream out;
  out << "1000 composable pairs, " << compose_bad << " failures; " << rewrites
      << " rewrites at sites of 500 deltas, " << rewrite_bad
      << " endpoint failures, " << unmatched << " unmatched, " << splice_bad
      << " splice failures";
  return {compose_bad == 0 && rewrite_bad == 0 && unmatched == 0 && splice_bad == 0,
          out.str()};
}

// 5. src(d1/d2) is alpha-equal to tgt(d2); the diamond is only monitored.
Result residual_law() {
  std::uint64_t found = 0, attempts = 0, bad = 0, diamond_checked = 0,
                diamond_bad = 0;
  while (found < 1000 && attempts < 20000) {
    const std::uint64_t seed = mix_seed(5, attempts++);
    auto [a, b] = gen_compatible_pair(seed, 24);
    if (!compatible(a, b)) continue;
    std::optional<Delta> r;
    try {
      r = residual(a, b);
    } catch (const UndefinedResidual&) {
      continue;
    }
    ++found;
    if (!oracle::alpha(src(*r), tgt(b))) ++bad;
    if (compatible(b, a)) {
      try {
        Delta r2 = residual(b, a);
        ++diamond_checked;
        if (!oracle::alpha(tgt(compose(b, *r)), tgt(compose(a, r2)))) ++diamond_bad;
      } catch (const UndefinedResidual&) {
      }
    }
  }
  std::ostringstream out;
  out << found << " compatible pairs with residual (" << attempts
      << " drawn), " << bad << " source-law failures; diamond: " << diamond_bad
      << " violations of " << diamond_checked << " checked (monitored)";
  return {found >= 1000 && bad == 0, out.str()};
}

// 6. Substitution square, against an independent substitution.
Result substitution_square() {
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    FreshNameScope names;
    SubstCase c = gen_subst_case(mix_seed(6, i), 24);
    Delta r = delta_subst(c.d, c.dv, c.x);
    const bool ok =
        oracle::alpha(src(r), oracle::subst(src(c.d), src(c.dv), c.x)) &&
        oracle::alpha(tgt(r), oracle::subst(tgt(c.d), tgt(c.dv), c.x));
    bad += ok ? 0 : 1;
  }
  return {bad == 0, "1000 triples, " + std::to_string(bad) + " failures"};
}

// 7. The copy-list program edited to pair each head with its duplicate.
Result worked_example() {
  const std::string dir = ILC_FIXTURE_DIR;
  Term program = parse_term(read_file(dir + "/copy_list.ilc"));
  Delta edit = parse_delta(read_file(dir + "/copy_list_pair_with_dup.ilcd"));
  if (!check_valid(edit, program)) return {false, "edit does not apply to program"};
  const std::uint64_t fuel = 10000;
  EvalOutcome v = eval(src(edit), fuel), v2 = eval(tgt(edit), fuel);
  if (!std::holds_alternative<Val>(v) || !std::holds_alternative<Val>(v2)) {
    return {false, "baseline evaluation failed"};
  }
  const Term& out = std::get<Val>(v).value;
  const Term& out2 = std::get<Val>(v2).value;
  Delta dv = delta_eval(edit, fuel);
  const bool coherent = oracle::alpha(src(dv), out) && oracle::alpha(tgt(dv), out2);

  std::function<std::size_t(const Delta&)> pair_ins = [&](const Delta& d) {
    std::size_t n = d.is(DeltaKind::kIns) && d.frame().term().is(TermKind::kPair);
    for (const Delta& c : d.children()) n += pair_ins(c);
    return n;
  };
  const std::size_t ins = pair_ins(dv);
  const std::size_t ins_total = count_kind(dv, DeltaKind::kIns);
  const std::size_t replaces = count_kind(dv, DeltaKind::kReplace);
  // Oracle: the structural difference of the two baseline outputs.
  Delta expected = diff(out, out2);
  const std::size_t expected_ins = pair_ins(expected);
  const bool matches_oracle = eps_equivalent(dv, expected);
  std::ostringstream d;
  d << "output " << pretty_delta(dv) << "; coherent " << (coherent ? "yes" : "no")
    << ", pair insertions " << ins << " (oracle " << expected_ins
    << "), other insertions " << ins_total - ins << ", replacements " << replaces
    << ", equal to diff of outputs " << (matches_oracle ? "yes" : "no");
  return {coherent && ins == 2 && expected_ins == 2 && ins_total == 2 &&
              replaces == 0 && matches_oracle,
          d.str()};
}

// 8. Exhaustive small scope: criteria 1 and 2 for every term and delta.
Result exhaustive() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Term> terms = enumerate_closed_terms(6);
  std::uint64_t deltas = 0, sound_bad = 0, coherent = 0, incoherent = 0,
                skipped = 0;
  for (const Term& e : terms) {
    for (const Delta& d : enumerate_deltas(e, 4)) {
      FreshNameScope names;
      ++deltas;
      if (!(apply(src(d), d) == tgt(d)) || !(tgt(d) == oracle::target(d)) ||
          !oracle::alpha(src(d), e)) {
        ++sound_bad;
      }
      EvalOutcome v = eval(src(d), 512), v2 = eval(tgt(d), 512);
      if (!std::holds_alternative<Val>(v) || !std::holds_alternative<Val>(v2)) {
        ++skipped;
        continue;
      }
      try {
        Delta dv = delta_eval(d, 512 * kDeltaFuelFactor);
        if (oracle::alpha(src(dv), std::get<Val>(v).value) &&
            oracle::alpha(tgt(dv), std::get<Val>(v2).value)) {
          ++coherent;
        } else {
          ++incoherent;
        }
      } catch (const Error&) {
        ++incoherent;
      }
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::ostringstream d;
  d << terms.size() << " terms, " << deltas << " deltas: " << sound_bad
    << " endpoint failures, " << coherent << " coherent, " << incoherent
    << " incoherent, " << skipped << " skipped; " << secs << " s";
  return {sound_bad == 0 && incoherent == 0 && secs < 300, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {"1 coherence suite", coherence_suite},
      {"2 endpoint soundness", endpoint_soundness},
      {"3 diff roundtrip", diff_roundtrip},
      {"4 equational theory endpoints", equational_theory},
      {"5 residual source law", residual_law},
      {"6 substitution square", substitution_square},
      {"7 worked example", worked_example},
      {"8 exhaustive small scope", exhaustive},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Result r{false, ""};
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", c.name, r.detail.c_str());
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
