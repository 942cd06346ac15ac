#include <doctest.h>

#include "../oracles.hpp"
#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"

using namespace ilc;

namespace {

const Term kUnit = Term::unit();
Delta eps_unit() { return Delta::eps(kUnit); }
Context ctx(const char* text) { return parse_context(text); }

}  // namespace

TEST_CASE("plug") {
  CHECK(plug(Context::empty(), kUnit) == kUnit);
  CHECK(plug(ctx("inl @"), kUnit) == Term::inl(kUnit));
  CHECK(plug(ctx("fun x -> @"), Term::var("x")) == Term::lam("x", Term::var("x")));
}

TEST_CASE("is_value") {
  CHECK(is_value(parse_term("fun x -> x x")));
  CHECK_FALSE(is_value(parse_term("(fun x -> x) ()")));
  CHECK(is_value(parse_term("(inl (), ())")));
  CHECK(is_value(parse_term("roll inr ((), roll inl ())")));
  CHECK_FALSE(is_value(parse_term("x")));
  CHECK_FALSE(is_value(parse_term("inl unroll roll ()")));
}

TEST_CASE("free_vars and alpha_eq") {
  CHECK(free_vars(Term::var("x")) == NameSet{"x"});
  CHECK(free_vars(parse_term("fun x -> x")).empty());
  CHECK(free_vars(parse_term("match z { inl x -> x | inr y -> w }")) ==
        NameSet{"z", "w"});
  CHECK(alpha_eq(parse_term("fun x -> x"), parse_term("fun y -> y")));
  CHECK(alpha_eq(parse_term("fun x -> z"), parse_term("fun y -> z")));
  CHECK_FALSE(alpha_eq(parse_term("fun x -> x"), parse_term("fun x -> ()")));
  CHECK_FALSE(alpha_eq(parse_term("fun x -> fun y -> x"),
                       parse_term("fun x -> fun y -> y")));
}

TEST_CASE("property: alpha_eq agrees with the nameless oracle") {
  std::vector<Term> ts;
  for (std::uint64_t i = 0; i < 200; ++i) ts.push_back(gen_term(mix_seed(200, i), 12));
  for (const Term& t : enumerate_closed_terms(4)) ts.push_back(t);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    int counter = 0;
    Term renamed = oracle::uniquify(ts[i], counter);
    REQUIRE(alpha_eq(ts[i], renamed));
    for (std::size_t j = i; j < std::min(ts.size(), i + 20); ++j) {
      REQUIRE(alpha_eq(ts[i], ts[j]) == oracle::alpha(ts[i], ts[j]));
      REQUIRE(alpha_eq(ts[i], ts[j]) == alpha_eq(ts[j], ts[i]));
    }
  }
}

TEST_CASE("src and tgt") {
  Delta bang = Delta::inl_bang(eps_unit());
  CHECK(src(bang) == Term::inr(kUnit));
  CHECK(tgt(bang) == Term::inl(kUnit));
  Delta ins = Delta::ins(ctx("(@, ())"), eps_unit());
  CHECK(src(ins) == kUnit);
  CHECK(tgt(ins) == Term::pair(kUnit, kUnit));
  Delta del = Delta::del(ctx("(@, ())"), eps_unit());
  CHECK(src(del) == Term::pair(kUnit, kUnit));
  CHECK(tgt(del) == kUnit);
  CHECK(src(Delta::var_replace("x", "y")) == Term::var("x"));
  CHECK(tgt(Delta::var_replace("x", "y")) == Term::var("y"));
}

TEST_CASE("apply") {
  Delta bang = Delta::inl_bang(eps_unit());
  CHECK(apply(Term::inr(kUnit), bang) == Term::inl(kUnit));
  Term e = parse_term("fun f -> f (inl ())");
  CHECK(apply(e, Delta::eps(e)) == e);
  try {
    apply(kUnit, bang);
    FAIL("no error");
  } catch (const EndpointMismatch& m) {
    CHECK(m.expected_source() == Term::inr(kUnit));
    CHECK(m.actual() == kUnit);
  }
  // Alpha-equivalent sources are accepted.
  Delta d = parse_delta("fun x -> ~{x}");
  CHECK_NOTHROW(apply(parse_term("fun y -> y"), d));
}

TEST_CASE("diff") {
  Term e = parse_term("fun x -> (x, inl ())");
  CHECK(diff(e, e) == Delta::eps(e));
  CHECK(diff(Term::inr(kUnit), Term::inl(kUnit)) == Delta::inl_bang(eps_unit()));
  CHECK(diff(kUnit, Term::pair(kUnit, kUnit)) ==
        Delta::ins(ctx("(@, ())"), eps_unit()));
}

TEST_CASE("decompose") {
  CHECK(decompose(Delta::ins(ctx("inl (@, ())"), eps_unit())) ==
        Delta::ins(ctx("inl @"), Delta::ins(ctx("(@, ())"), eps_unit())));
  Delta inner = Delta::inl_bang(eps_unit());
  CHECK(decompose(Delta::ins(Context::empty(), inner)) == inner);
  CHECK(decompose(inner) == inner);
}

TEST_CASE("check_valid") {
  CHECK(check_valid(eps_unit(), kUnit));
  CHECK(check_valid(Delta::inl_bang(eps_unit()), Term::inr(kUnit)));
  CHECK_FALSE(check_valid(Delta::inl_bang(eps_unit()), Term::inl(kUnit)));
}

TEST_CASE("property: generated deltas are valid and endpoints match the oracle") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Term e = gen_term(mix_seed(300, i), 30);
    Delta d = gen_delta(mix_seed(301, i), e, 16);
    CAPTURE(pretty_delta(d));
    REQUIRE(check_valid(d, e));
    REQUIRE(src(d) == oracle::source(d));
    REQUIRE(tgt(d) == oracle::target(d));
    REQUIRE(apply(src(d), d) == tgt(d));
    // Decomposition keeps both endpoints.
    Delta dd = decompose(d);
    REQUIRE(oracle::alpha(src(dd), src(d)));
    REQUIRE(oracle::alpha(tgt(dd), tgt(d)));
  }
}

TEST_CASE("property: plug adds the context size") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Term e = gen_term(mix_seed(310, i), 20);
    Delta d = gen_delta(mix_seed(311, i), e, 12);
    if (!d.is(DeltaKind::kIns) && !d.is(DeltaKind::kDel)) continue;
    const Context& c = d.frame();
    CHECK(plug(c, e).size() == c.size() + e.size());
    CHECK(plug(c, e) == oracle::plug(c.term(), e));
  }
}

TEST_CASE("property: diff round-trips") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Term a = gen_term(mix_seed(320, i), 25);
    Term b = gen_term(mix_seed(321, i), 25);
    Delta d = diff(a, b);
    REQUIRE(oracle::alpha(apply(a, d), b));
    REQUIRE(diff(a, a) == Delta::eps(a));
  }
}

TEST_CASE("property: alpha_eq is an equivalence on sampled triples") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Term a = gen_term(mix_seed(330, i), 16);
    int c1 = 0, c2 = 500;
    Term b = oracle::uniquify(a, c1);
    Term c = oracle::uniquify(b, c2);
    REQUIRE(alpha_eq(a, a));
    REQUIRE(alpha_eq(a, b) == alpha_eq(b, a));
    REQUIRE(alpha_eq(a, b));
    REQUIRE(alpha_eq(b, c));
    REQUIRE(alpha_eq(a, c));
    Term other = gen_term(mix_seed(331, i), 16);
    if (alpha_eq(a, other) && alpha_eq(other, c)) REQUIRE(alpha_eq(a, c));
  }
}

namespace {

bool value_by_grammar(const Term& t) {
  switch (t.kind()) {
    case TermKind::kUnit:
    case TermKind::kLam: return true;
    case TermKind::kInl:
    case TermKind::kInr:
    case TermKind::kRoll: return value_by_grammar(t.child(0));
    case TermKind::kPair:
      return value_by_grammar(t.first()) && value_by_grammar(t.second());
    default: return false;
  }
}

}  // namespace

TEST_CASE("property: is_value matches the value grammar on all small terms") {
  std::size_t n = 0;
  for (const Term& t : enumerate_closed_terms(6)) {
    REQUIRE(is_value(t) == value_by_grammar(t));
    Term rolled = Term::roll(t);
    REQUIRE(is_value(rolled) == value_by_grammar(rolled));
    ++n;
  }
  CHECK(n > 1000);
  CHECK_FALSE(is_value(Term::hole()));
  CHECK(parse_term("_") == Term::hole());
}

TEST_CASE("property: congruence endpoints on all small deltas") {
  std::size_t n = 0;
  for (const Term& e : enumerate_closed_terms(4)) {
    for (const Delta& d : enumerate_deltas(e, 5)) {
      if (!d.is_congruence()) continue;
      ++n;
      std::vector<Term> s, t;
      for (const Delta& c : d.children()) {
        s.push_back(src(c));
        t.push_back(tgt(c));
      }
      TermKind shape = *congruence_shape(d.kind());
      REQUIRE(src(d) == Term::make(shape, d.names(), s));
      REQUIRE(tgt(d) == Term::make(shape, d.names(), t));
    }
  }
  CHECK(n > 100);
}

TEST_CASE("diff does not build a match congruence across different binders") {
  Term a = parse_term("match inl () { inl x -> x | inr y -> y }");
  Term b = parse_term("match inl () { inl z -> z | inr y -> y }");
  Delta d = diff(a, b);
  CHECK_FALSE(d.is(DeltaKind::kMatch));
  CHECK(oracle::alpha(apply(a, d), b));
}
