#include <doctest.h>

#include "ilc/harness.hpp"
#include "ilc/syntax.hpp"

using namespace ilc;

TEST_CASE("parse_term builds the expected trees") {
  CHECK(parse_term("inl ()") == Term::inl(Term::unit()));
  CHECK(parse_term("fun x -> x x") ==
        Term::lam("x", Term::app(Term::var("x"), Term::var("x"))));
  CHECK(parse_term("match inr () { inl a -> a | inr b -> () }") ==
        Term::match_sum(Term::inr(Term::unit()), "a", Term::var("a"), "b",
                        Term::unit()));
  CHECK(parse_term("f x y") ==
        Term::app(Term::app(Term::var("f"), Term::var("x")), Term::var("y")));
  CHECK(parse_term("match p { (a, b) -> b }") ==
        Term::match_pair(Term::var("p"), "a", "b", Term::var("b")));
  CHECK(parse_term("unroll roll inl ()") ==
        Term::unroll(Term::roll(Term::inl(Term::unit()))));
  CHECK(parse_term("  -- comment\n ( () , () ) ") ==
        Term::pair(Term::unit(), Term::unit()));
}

TEST_CASE("parse_context and parse_delta") {
  CHECK(parse_context("(@, ())").term() == Term::pair(Term::slot(), Term::unit()));
  CHECK(parse_delta("inl! ~{()}") == Delta::inl_bang(Delta::eps(Term::unit())));
  CHECK(parse_delta("+[inl @]{~{()}}") ==
        Delta::ins(Context(Term::inl(Term::slot())), Delta::eps(Term::unit())));
  CHECK_THROWS_AS(parse_context("(@, @)"), ParseError);
  CHECK_THROWS_AS(parse_context("()"), ParseError);
}

TEST_CASE("parse errors carry a position and the expected tokens") {
  try {
    parse_term("fun x ->\n  (x,");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 5);
    CHECK(!e.expected().empty());
  }
  CHECK_THROWS_AS(parse_term("inl () )"), ParseError);
  CHECK_THROWS_AS(parse_term("fun a!1 -> a!1"), ParseError);
  CHECK_THROWS_AS(parse_delta("+[inl ()]{~{()}}"), ParseError);
}

TEST_CASE("pretty printing") {
  CHECK(pretty_term(Term::inl(Term::unit())) == "inl ()");
  CHECK(pretty_term(Term::app(Term::app(Term::var("f"), Term::var("x")),
                              Term::var("y"))) == "f x y");
  CHECK(pretty_term(Term::app(Term::var("f"),
                              Term::app(Term::var("x"), Term::var("y")))) ==
        "f (x y)");
  CHECK(pretty_delta(Delta::inl_bang(Delta::eps(Term::unit()))) == "inl! ~{()}");
}

TEST_CASE("property: printing then parsing is the identity") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Term t = gen_term(mix_seed(100, i), 40);
    CAPTURE(pretty_term(t));
    REQUIRE(parse_term(pretty_term(t)) == t);
    Delta d = gen_delta(mix_seed(101, i), t, 20);
    CAPTURE(pretty_delta(d));
    REQUIRE(parse_delta(pretty_delta(d)) == d);
    // Normalized text is a fixed point.
    CHECK(pretty_term(parse_term(pretty_term(t))) == pretty_term(t));
  }
}

TEST_CASE("property: enumerated terms round-trip") {
  for (const Term& t : enumerate_closed_terms(5)) {
    REQUIRE(parse_term(pretty_term(t)) == t);
  }
}
