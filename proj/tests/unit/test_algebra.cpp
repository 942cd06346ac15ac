#include <doctest.h>

#include "../oracles.hpp"
#include "ilc/algebra.hpp"
#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"

using namespace ilc;

namespace {

const Term kUnit = Term::unit();
Delta eps_unit() { return Delta::eps(kUnit); }
Delta d(const char* text) { return parse_delta(text); }

}  // namespace

TEST_CASE("compose examples") {
  CHECK(compose(Delta::eps(Term::inr(kUnit)), Delta::inl_bang(eps_unit())) ==
        Delta::inl_bang(eps_unit()));
  CHECK(compose(d("+[inl @]{~{()}}"), d("-[inl @]{~{()}}")) == eps_unit());
  CHECK(compose(Delta::inl_bang(eps_unit()), Delta::inr_bang(eps_unit())) ==
        Delta::inr(eps_unit()));
  CHECK(compose(Delta::inr_bang(eps_unit()), Delta::inl_bang(eps_unit())) ==
        Delta::inl(eps_unit()));
  try {
    compose(Delta::inl_bang(eps_unit()), Delta::inl_bang(eps_unit()));
    FAIL("no error");
  } catch (const NotComposable& e) {
    CHECK(e.first_target() == Term::inl(kUnit));
    CHECK(e.second_source() == Term::inr(kUnit));
  }
}

TEST_CASE("each equation rewrites its own shape") {
  Context c = parse_context("(@, ())");
  Delta s = Delta::inl_bang(eps_unit());
  Delta e = Delta::eps(Term::inl(kUnit));
  CHECK(rewrite(Equation::kEpsLeft, Delta::eps(Term::inr(kUnit)), s) == s);
  CHECK(rewrite(Equation::kEpsRight, s, e) == s);
  CHECK(rewrite(Equation::kInsDel, Delta::ins(c, s), Delta::del(c, e)) == s);
  CHECK(rewrite(Equation::kInsCong, Delta::ins(c, s), *spine(c, e)) ==
        Delta::ins(c, s));
  CHECK(rewrite(Equation::kCongDel, *spine(c, s), Delta::del(c, e)) ==
        Delta::del(c, s));
  CHECK(rewrite(Equation::kInlBangInrBang, Delta::inl_bang(s), Delta::inr_bang(e)) ==
        Delta::inr(s));
  // Shapes that do not match.
  CHECK_FALSE(rewrite(Equation::kInsDel, s, e).has_value());
  CHECK_FALSE(rewrite(Equation::kInrBangInlBang, s, e).has_value());
}

TEST_CASE("compatible examples") {
  Delta x = parse_delta("(inl! ~{()}, -[inl @]{~{()}})");
  CHECK(compatible(Delta::eps(src(x)), x));
  CHECK(compatible(Delta::inl(eps_unit()), Delta::inl(eps_unit())));
  CHECK_FALSE(compatible(d("-[inl @]{~{()}}"), Delta::inl(eps_unit())));
  CHECK_THROWS_AS(compatible(eps_unit(), Delta::inl_bang(eps_unit())), NotCoinitial);
}

TEST_CASE("residual examples") {
  Delta x = parse_delta("(inl! ~{()}, -[inl @]{~{()}})");
  CHECK(residual(x, Delta::eps(src(x))) == x);
  Delta r = residual(eps_unit(), d("+[fun x -> @]{~{()}}"));
  CHECK(eps_equivalent(r, Delta::lam("x", eps_unit())));
  CHECK(src(r) == parse_term("fun x -> ()"));
  Delta app_ins = d("+[(fun x -> x) @]{~{()}}");
  CHECK(residual(app_ins, eps_unit()) == app_ins);
}

TEST_CASE("property: compose preserves endpoints and is associative up to them") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::uint64_t seed = mix_seed(400, i);
    Term e = gen_term(seed, 24);
    Delta a = gen_delta(mix_seed(seed, 1), e, 10);
    Delta b = gen_delta(mix_seed(seed, 2), tgt(a), 10);
    Delta c = gen_delta(mix_seed(seed, 3), tgt(b), 10);
    Delta ab = compose(a, b);
    REQUIRE(oracle::alpha(src(ab), src(a)));
    REQUIRE(oracle::alpha(tgt(ab), tgt(b)));
    Delta left = compose(ab, c);
    Delta right = compose(a, compose(b, c));
    REQUIRE(oracle::alpha(src(left), src(right)));
    REQUIRE(oracle::alpha(tgt(left), tgt(right)));
    // Identities.
    REQUIRE(oracle::alpha(tgt(compose(Delta::eps(src(a)), a)), tgt(a)));
    REQUIRE(oracle::alpha(tgt(compose(a, Delta::eps(tgt(a)))), tgt(a)));
  }
}

TEST_CASE("property: everything is compatible with epsilon") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Term e = gen_term(mix_seed(410, i), 24);
    Delta a = gen_delta(mix_seed(411, i), e, 10);
    CHECK(compatible(Delta::eps(src(a)), a));
    CAPTURE(pretty_delta(a));
    CAPTURE(pretty_delta(residual(a, Delta::eps(src(a)))));
    CHECK(residual(a, Delta::eps(src(a))) == a);
  }
}

TEST_CASE("property: residual source law") {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto [a, b] = gen_compatible_pair(mix_seed(420, i), 20);
    REQUIRE(oracle::alpha(src(a), src(b)));
    if (!compatible(a, b)) continue;
    try {
      Delta r = residual(a, b);
      REQUIRE(oracle::alpha(src(r), tgt(b)));
      ++checked;
    } catch (const UndefinedResidual&) {
    }
  }
  CHECK(checked > 300);
}
