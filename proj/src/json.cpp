#include "ilc/json.hpp"

#include <string>
#include <utility>

namespace ilc {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing member \"") + key + "\"");
  return *it;
}

std::string string_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) {
    throw JsonError(std::string("member \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

std::string kind_of(const Json& j) { return string_member(j, "kind"); }

}  // namespace

Json to_json(const Term& t) {
  switch (t.kind()) {
    case TermKind::kHole: return {{"kind", "hole"}};
    case TermKind::kSlot: return {{"kind", "slot"}};
    case TermKind::kUnit: return {{"kind", "unit"}};
    case TermKind::kVar: return {{"kind", "var"}, {"name", t.name()}};
    case TermKind::kInl: return {{"kind", "inl"}, {"body", to_json(t.child(0))}};
    case TermKind::kInr: return {{"kind", "inr"}, {"body", to_json(t.child(0))}};
    case TermKind::kRoll: return {{"kind", "roll"}, {"body", to_json(t.child(0))}};
    case TermKind::kUnroll:
      return {{"kind", "unroll"}, {"body", to_json(t.child(0))}};
    case TermKind::kPair:
      return {{"kind", "pair"},
              {"first", to_json(t.first())},
              {"second", to_json(t.second())}};
    case TermKind::kLam:
      return {{"kind", "lam"}, {"binder", t.binder()}, {"body", to_json(t.body())}};
    case TermKind::kApp:
      return {{"kind", "app"}, {"fn", to_json(t.fn())}, {"arg", to_json(t.arg())}};
    case TermKind::kMatchSum:
      return {{"kind", "match"},
              {"scrutinee", to_json(t.scrutinee())},
              {"xl", t.name()},
              {"left", to_json(t.left())},
              {"xr", t.name2()},
              {"right", to_json(t.right())}};
    case TermKind::kMatchPair:
      return {{"kind", "matchpair"},
              {"scrutinee", to_json(t.scrutinee())},
              {"x1", t.name()},
              {"x2", t.name2()},
              {"body", to_json(t.body())}};
  }
  return nullptr;
}

Json to_json(const Context& c) { return to_json(c.term()); }

Term term_from_json(const Json& j) {
  const std::string k = kind_of(j);
  try {
    if (k == "hole") return Term::hole();
    if (k == "slot") return Term::slot();
    if (k == "unit") return Term::unit();
    if (k == "var") return Term::var(string_member(j, "name"));
    if (k == "inl") return Term::inl(term_from_json(member(j, "body")));
    if (k == "inr") return Term::inr(term_from_json(member(j, "body")));
    if (k == "roll") return Term::roll(term_from_json(member(j, "body")));
    if (k == "unroll") return Term::unroll(term_from_json(member(j, "body")));
    if (k == "pair") {
      return Term::pair(term_from_json(member(j, "first")),
                        term_from_json(member(j, "second")));
    }
    if (k == "lam") {
      return Term::lam(string_member(j, "binder"),
                       term_from_json(member(j, "body")));
    }
    if (k == "app") {
      return Term::app(term_from_json(member(j, "fn")),
                       term_from_json(member(j, "arg")));
    }
    if (k == "match") {
      return Term::match_sum(term_from_json(member(j, "scrutinee")),
                             string_member(j, "xl"),
                             term_from_json(member(j, "left")),
                             string_member(j, "xr"),
                             term_from_json(member(j, "right")));
    }
    if (k == "matchpair") {
      return Term::match_pair(term_from_json(member(j, "scrutinee")),
                              string_member(j, "x1"), string_member(j, "x2"),
                              term_from_json(member(j, "body")));
    }
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(e.what());
  }
  throw JsonError("unknown term kind \"" + k + "\"");
}

Context context_from_json(const Json& j) {
  Term t = term_from_json(j);
  try {
    return Context(std::move(t));
  } catch (const InvalidContext& e) {
    throw JsonError(e.what());
  }
}

Json to_json(const Delta& d) {
  switch (d.kind()) {
    case DeltaKind::kEps: return {{"kind", "eps"}, {"at", to_json(d.term())}};
    case DeltaKind::kIns:
    case DeltaKind::kDel:
      return {{"kind", d.is(DeltaKind::kIns) ? "ins" : "del"},
              {"frame", to_json(d.frame())},
              {"inner", to_json(d.inner())}};
    case DeltaKind::kInl: return {{"kind", "inl"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kInr: return {{"kind", "inr"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kInlBang:
      return {{"kind", "inlbang"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kInrBang:
      return {{"kind", "inrbang"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kRoll: return {{"kind", "roll"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kUnroll:
      return {{"kind", "unroll"}, {"inner", to_json(d.inner())}};
    case DeltaKind::kMatch:
      return {{"kind", "match"},
              {"scrut", to_json(d.child(0))},
              {"xl", d.name()},
              {"left", to_json(d.child(1))},
              {"xr", d.name2()},
              {"right", to_json(d.child(2))}};
    case DeltaKind::kPair:
      return {{"kind", "pair"},
              {"first", to_json(d.child(0))},
              {"second", to_json(d.child(1))}};
    case DeltaKind::kLam:
      return {{"kind", "lam"}, {"binder", d.name()}, {"body", to_json(d.inner())}};
    case DeltaKind::kApp:
      return {{"kind", "app"},
              {"fn", to_json(d.child(0))},
              {"arg", to_json(d.child(1))}};
    case DeltaKind::kReplace:
      return {{"kind", "replace"},
              {"from", to_json(d.term())},
              {"to", to_json(d.term2())}};
    case DeltaKind::kVarReplace:
      return {{"kind", "varreplace"}, {"from", d.name()}, {"to", d.name2()}};
  }
  return nullptr;
}

Delta delta_from_json(const Json& j) {
  const std::string k = kind_of(j);
  auto inner = [&] { return delta_from_json(member(j, "inner")); };
  try {
    if (k == "eps") return Delta::eps(term_from_json(member(j, "at")));
    if (k == "ins") return Delta::ins(context_from_json(member(j, "frame")), inner());
    if (k == "del") return Delta::del(context_from_json(member(j, "frame")), inner());
    if (k == "inl") return Delta::inl(inner());
    if (k == "inr") return Delta::inr(inner());
    if (k == "inlbang") return Delta::inl_bang(inner());
    if (k == "inrbang") return Delta::inr_bang(inner());
    if (k == "roll") return Delta::roll(inner());
    if (k == "unroll") return Delta::unroll(inner());
    if (k == "match") {
      return Delta::match(delta_from_json(member(j, "scrut")),
                          string_member(j, "xl"),
                          delta_from_json(member(j, "left")),
                          string_member(j, "xr"),
                          delta_from_json(member(j, "right")));
    }
    if (k == "pair") {
      return Delta::pair(delta_from_json(member(j, "first")),
                         delta_from_json(member(j, "second")));
    }
    if (k == "lam") {
      return Delta::lam(string_member(j, "binder"),
                        delta_from_json(member(j, "body")));
    }
    if (k == "app") {
      return Delta::app(delta_from_json(member(j, "fn")),
                        delta_from_json(member(j, "arg")));
    }
    if (k == "replace") {
      return Delta::replace(term_from_json(member(j, "from")),
                            term_from_json(member(j, "to")));
    }
    if (k == "varreplace") {
      return Delta::var_replace(string_member(j, "from"), string_member(j, "to"));
    }
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(e.what());
  }
  throw JsonError("unknown delta kind \"" + k + "\"");
}

Json to_json(const EvalOutcome& outcome) {
  if (const auto* v = std::get_if<Val>(&outcome)) {
    return {{"kind", "value"}, {"value", to_json(v->value)}};
  }
  if (const auto* s = std::get_if<Stuck>(&outcome)) {
    return {{"kind", "stuck"}, {"reason", s->reason}, {"at", to_json(s->at)}};
  }
  const auto& f = std::get<OutOfFuel>(outcome);
  return {{"kind", "out_of_fuel"}, {"at", to_json(f.remaining)}};
}

EvalOutcome outcome_from_json(const Json& j) {
  const std::string k = kind_of(j);
  if (k == "value") return Val{term_from_json(member(j, "value"))};
  if (k == "stuck") {
    return Stuck{string_member(j, "reason"), term_from_json(member(j, "at"))};
  }
  if (k == "out_of_fuel") return OutOfFuel{term_from_json(member(j, "at"))};
  throw JsonError("unknown outcome kind \"" + k + "\"");
}

}  // namespace ilc
