#include <doctest.h>

#include "../oracles.hpp"
#include "ilc/eval.hpp"
#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"

using namespace ilc;

namespace {

const Term kUnit = Term::unit();
Delta eps_unit() { return Delta::eps(kUnit); }
Term t(const char* text) { return parse_term(text); }
Delta d(const char* text) { return parse_delta(text); }

Term value_of(const EvalOutcome& o) {
  REQUIRE(std::holds_alternative<Val>(o));
  return std::get<Val>(o).value;
}

bool stuck(const EvalOutcome& o) { return std::holds_alternative<Stuck>(o); }

}  // namespace

TEST_CASE("subst") {
  CHECK(subst(Term::var("x"), kUnit, "x") == kUnit);
  CHECK(subst(t("fun x -> x"), kUnit, "x") == t("fun x -> x"));
  FreshNameScope names;
  Term r = subst(t("fun y -> x"), t("fun z -> y"), "x");
  CHECK(r.is(TermKind::kLam));
  CHECK(r.binder() != "y");
  CHECK(alpha_eq(r, t("fun w -> fun z -> y")));
}

TEST_CASE("property: subst agrees with the oracle on open values") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    FreshNameScope names;
    SubstCase c = gen_subst_case(mix_seed(500, i), 20);
    Term e = src(c.d), v = src(c.dv);
    REQUIRE(oracle::alpha(subst(e, v, c.x), oracle::subst(e, v, c.x)));
  }
}

TEST_CASE("eval examples") {
  CHECK(value_of(eval(t("(fun x -> x) (inl ())"), 10)) == Term::inl(kUnit));
  CHECK(value_of(eval(t("match inr () { inl a -> a | inr b -> (b, b) }"), 10)) ==
        Term::pair(kUnit, kUnit));
  CHECK(std::holds_alternative<OutOfFuel>(
      eval(t("(fun x -> x x) (fun x -> x x)"), 100)));
  CHECK(value_of(eval(t("unroll roll inl ()"), 10)) == Term::inl(kUnit));
  CHECK(value_of(eval(t("match ((), inl ()) { (a, b) -> b }"), 10)) ==
        Term::inl(kUnit));
}

TEST_CASE("eval gets stuck on ill-formed programs") {
  CHECK(stuck(eval(Term::hole(), 10)));
  CHECK(stuck(eval(t("x"), 10)));
  CHECK(stuck(eval(t("() ()"), 10)));
  CHECK(stuck(eval(t("match () { inl a -> a | inr b -> b }"), 10)));
  CHECK(stuck(eval(t("match inl () { (a, b) -> a }"), 10)));
  CHECK(stuck(eval(t("unroll inl ()"), 10)));
}

TEST_CASE("property: eval is deterministic and monotone in fuel") {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Term e = gen_term(mix_seed(510, i), 30);
    EvalOutcome small = eval(e, 8);
    EvalOutcome large = eval(e, 4096);
    EvalOutcome again = eval(e, 4096);
    REQUIRE(large.index() == again.index());
    if (auto* v = std::get_if<Val>(&large)) {
      REQUIRE(std::get<Val>(again).value == v->value);
      REQUIRE(is_value(v->value));
    }
    // Finishing on a small budget means finishing identically on a large one.
    if (auto* v = std::get_if<Val>(&small)) {
      REQUIRE(std::holds_alternative<Val>(large));
      REQUIRE(std::get<Val>(large).value == v->value);
    }
  }
}

TEST_CASE("delta_subst examples") {
  Delta bang = Delta::inl_bang(eps_unit());
  CHECK(delta_subst(Delta::eps(Term::var("x")), bang, "x") == bang);
  CHECK(delta_subst(Delta::var_replace("x", "y"), eps_unit(), "x") ==
        Delta::replace(kUnit, Term::var("y")));
  Delta r = delta_subst(d("+[fun x -> @]{~{x}}"), eps_unit(), "x");
  CHECK(r == Delta::ins(parse_context("fun x -> @"),
                        Delta::replace(kUnit, Term::var("x"))));
  CHECK(src(r) == kUnit);
  CHECK(tgt(r) == t("fun x -> x"));
}

TEST_CASE("property: substitution square") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    FreshNameScope names;
    SubstCase c = gen_subst_case(mix_seed(520, i), 20);
    Delta r = delta_subst(c.d, c.dv, c.x);
    CAPTURE(pretty_delta(c.d));
    CAPTURE(pretty_delta(c.dv));
    REQUIRE(oracle::alpha(src(r), oracle::subst(src(c.d), src(c.dv), c.x)));
    REQUIRE(oracle::alpha(tgt(r), oracle::subst(tgt(c.d), tgt(c.dv), c.x)));
  }
}

TEST_CASE("delta_eval examples") {
  Delta bang = Delta::inl_bang(eps_unit());
  CHECK(delta_eval(bang, 100) == bang);
  CHECK(delta_eval(Delta::app(Delta::eps(t("fun x -> x")), bang), 100) == bang);
  CHECK(delta_eval(d("+[(fun x -> x) @]{~{inl ()}}"), 100) ==
        Delta::replace(Term::inl(kUnit), Term::inl(kUnit)));
  Delta u = delta_eval(d("+[unroll @]{~{roll inl ()}}"), 100);
  CHECK(src(u) == t("roll inl ()"));
  CHECK(tgt(u) == t("inl ()"));
  CHECK(delta_eval(Delta::eps(t("(fun x -> (x, x)) ()")), 100) ==
        Delta::eps(t("((), ())")));
  Delta lam = d("fun x -> inl! ~{x}");
  CHECK(delta_eval(lam, 100) == lam);
}

TEST_CASE("delta_eval keeps structure through a pair insertion") {
  RuleStats stats;
  Delta r = delta_eval(d("(fun y -> +[(@, y)]{~{y}}) ~{inl ()}"), 100, &stats);
  CHECK(r == Delta::ins(Context(Term::pair(Term::slot(), Term::inl(kUnit))),
                        Delta::eps(Term::inl(kUnit))));
  CHECK(stats.count(Rule::kAppCong) == 1);
  CHECK(stats.count(Rule::kPairInsRight) + stats.count(Rule::kPairInsLeft) == 1);
  CHECK(count_kind(r, DeltaKind::kReplace) == 0);
}

TEST_CASE("delta_eval reports which endpoint failed") {
  try {
    delta_eval(d("+[@ ()]{~{()}}"), 100);
    FAIL("no error");
  } catch (const DeltaEvalError& e) {
    CHECK(e.endpoint() == Endpoint::kTarget);
    CHECK(e.cause() == DeltaEvalError::Cause::kStuck);
  }
  try {
    delta_eval(d("-[(fun x -> x x) @]{~{fun x -> x x}}"), 100);
    FAIL("no error");
  } catch (const DeltaEvalError& e) {
    CHECK(e.endpoint() == Endpoint::kSource);
    CHECK(e.cause() == DeltaEvalError::Cause::kOutOfFuel);
  }
}

TEST_CASE("property: delta_eval is coherent") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    FreshNameScope names;
    Term e = gen_term(mix_seed(530, i), 30);
    Delta dl = gen_delta(mix_seed(531, i), e, 15);
    EvalOutcome a = eval(src(dl), 512), b = eval(tgt(dl), 512);
    if (!std::holds_alternative<Val>(a) || !std::holds_alternative<Val>(b)) continue;
    CAPTURE(pretty_delta(dl));
    Delta dv = delta_eval(dl, 2048);
    REQUIRE(oracle::alpha(src(dv), std::get<Val>(a).value));
    REQUIRE(oracle::alpha(tgt(dv), std::get<Val>(b).value));
  }
}

TEST_CASE("property: epsilon evaluates to epsilon at the value") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Term e = gen_term(mix_seed(540, i), 30);
    EvalOutcome o = eval(e, 512);
    if (!std::holds_alternative<Val>(o)) continue;
    REQUIRE(delta_eval(Delta::eps(e), 2048) == Delta::eps(std::get<Val>(o).value));
  }
}

TEST_CASE("precision: congruent programs over value deltas produce no replacement") {
  const std::string cases[] = {
      "match inl ~{((), ())} { inl a -> ~{(a, ())} | inr b -> ~{b} }",
      "match inl +[(@, ())]{~{()}} { inl a -> ~{inr a} | inr b -> ~{b} }",
      "(fun f -> ~{f} (inl! ~{()})) ~{fun x -> (x, x)}",
      "~{fun x -> inr x} (inl! ~{()})",
      "(fun x -> (~{x}, ~{x})) +[inl @]{~{()}}",
      "unroll roll inr! ~{()}",
      "roll (inl! ~{()}, -[inl @]{~{()}})",
  };
  for (const std::string& text : cases) {
    CAPTURE(text);
    Delta dl = parse_delta(text);
    Delta dv = delta_eval(dl, 1000);
    CAPTURE(pretty_delta(dv));
    CHECK(count_kind(dv, DeltaKind::kReplace) == 0);
    CHECK(oracle::alpha(src(dv), value_of(eval(src(dl), 1000))));
    CHECK(oracle::alpha(tgt(dv), value_of(eval(tgt(dl), 1000))));
  }
}
