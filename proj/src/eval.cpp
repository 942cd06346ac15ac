#include "ilc/eval.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ilc/algebra.hpp"

namespace ilc {

StuckError::StuckError(std::string reason, Term at)
    : Error("stuck: " + reason), reason_(std::move(reason)), at_(std::move(at)) {}

OutOfFuelError::OutOfFuelError(Term at)
    : Error("out of fuel"), at_(std::move(at)) {}

void Fuel::consume(const Term& at) {
  if (remaining_ == 0) throw OutOfFuelError(at);
  --remaining_;
}

std::string_view endpoint_name(Endpoint e) {
  switch (e) {
    case Endpoint::kSource: return "source";
    case Endpoint::kTarget: return "target";
    case Endpoint::kBoth: return "both";
  }
  return "?";
}

DeltaEvalError::DeltaEvalError(Endpoint endpoint, Cause cause,
                               std::string reason, Term at)
    : Error(std::string(endpoint_name(endpoint)) + " evaluation " +
            (cause == Cause::kStuck ? "stuck: " + reason : "out of fuel")),
      endpoint_(endpoint),
      cause_(cause),
      reason_(std::move(reason)),
      at_(std::move(at)) {}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kInlCong: return "inl";
    case Rule::kInlBang: return "inl!";
    case Rule::kInlIns: return "inl+";
    case Rule::kInlDel: return "inl-";
    case Rule::kInrCong: return "inr";
    case Rule::kInrBang: return "inr!";
    case Rule::kInrIns: return "inr+";
    case Rule::kInrDel: return "inr-";
    case Rule::kMatchInl: return "match-inl";
    case Rule::kMatchInr: return "match-inr";
    case Rule::kMatchBangInl: return "match-inl!";
    case Rule::kMatchBangInr: return "match-inr!";
    case Rule::kMatchScrutInsInl: return "match-inl+";
    case Rule::kMatchScrutInsInr: return "match-inr+";
    case Rule::kMatchIns: return "match+";
    case Rule::kMatchDel: return "match-";
    case Rule::kPairCong: return "pair";
    case Rule::kPairInsLeft: return "pair+left";
    case Rule::kPairInsRight: return "pair+right";
    case Rule::kPairDelLeft: return "pair-left";
    case Rule::kPairDelRight: return "pair-right";
    case Rule::kAppCong: return "app";
    case Rule::kAppInsLeft: return "app+left";
    case Rule::kAppInsRight: return "app+right";
    case Rule::kAppDelLeft: return "app-left";
    case Rule::kAppDelRight: return "app-right";
    case Rule::kRollCong: return "roll";
    case Rule::kRollIns: return "roll+";
    case Rule::kRollDel: return "roll-";
    case Rule::kUnrollCong: return "unroll";
    case Rule::kUnrollIns: return "unroll+";
    case Rule::kUnrollDel: return "unroll-";
    case Rule::kEps: return "eps";
    case Rule::kReplace: return "replace";
    case Rule::kLamValue: return "lam-value";
    case Rule::kFallback: return "fallback";
    case Rule::kCount: break;
  }
  return "?";
}

RuleStats& RuleStats::operator+=(const RuleStats& other) {
  for (std::size_t i = 0; i < kRuleCount; ++i) fired[i] += other.fired[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

struct Binding {
  std::string name;
  Term value;
};

// Indices into Term::names() of the binders scoping over child `i`.
std::vector<std::size_t> binder_slots(TermKind kind, std::size_t i) {
  switch (kind) {
    case TermKind::kLam:
      return {0};
    case TermKind::kMatchSum:
      if (i == 1) return {0};
      if (i == 2) return {1};
      return {};
    case TermKind::kMatchPair:
      if (i == 1) return {0, 1};
      return {};
    default:
      return {};
  }
}

class Substituter {
 public:
  explicit Substituter(std::vector<Binding> bindings)
      : bindings_(std::move(bindings)) {
    for (const Binding& b : bindings_) {
      NameSet fv = free_vars(b.value);
      value_free_.insert(fv.begin(), fv.end());
    }
  }

  Term run(const Term& t) const { return go(t, bindings_); }

 private:
  Term go(const Term& t, const std::vector<Binding>& active) const {
    if (active.empty()) return t;
    if (t.is(TermKind::kVar)) {
      for (const Binding& b : active) {
        if (b.name == t.name()) return b.value;
      }
      return t;
    }
    if (t.arity() == 0) return t;
    std::array<std::string, 2> names = t.names();
    std::vector<Term> kids = t.children();
    bool renamed = false;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto slots = binder_slots(t.kind(), i);
      if (slots.empty()) {
        kids[i] = go(kids[i], active);
        continue;
      }
      std::vector<Binding> inner;
      for (const Binding& b : active) {
        bool shadowed = false;
        for (std::size_t s : slots) shadowed |= names[s] == b.name;
        if (!shadowed) inner.push_back(b);
      }
      if (inner.empty()) continue;
      for (std::size_t s : slots) {
        if (value_free_.count(names[s]) == 0) continue;
        bool needed = false;
        for (const Binding& b : inner) needed |= is_free_in(b.name, kids[i]);
        if (!needed) continue;
        NameSet avoid = value_free_;
        NameSet body_free = free_vars(kids[i]);
        avoid.insert(body_free.begin(), body_free.end());
        for (const Binding& b : inner) avoid.insert(b.name);
        avoid.insert(names[0]);
        avoid.insert(names[1]);
        std::string fresh = fresh_name(names[s], avoid);
        kids[i] = Substituter({{names[s], Term::var(fresh)}}).run(kids[i]);
        names[s] = std::move(fresh);
        renamed = true;
      }
      kids[i] = go(kids[i], inner);
    }
    if (renamed) return Term::make(t.kind(), std::move(names), std::move(kids));
    return t.with_children(std::move(kids));
  }

  std::vector<Binding> bindings_;
  NameSet value_free_;
};

void check_size(const Term& t) {
  if (t.size() > kMaxTermSize) throw OutOfFuelError(t);
}

}  // namespace

Term subst(const Term& e, const Term& v, const std::string& x) {
  return Substituter({{x, v}}).run(e);
}

// ---------------------------------------------------------------------------
// Baseline evaluation

Term eval_value(const Term& input, Fuel& fuel) {
  Term e = input;
  for (;;) {
    switch (e.kind()) {
      case TermKind::kHole:
        throw StuckError("evaluation reached a hole", e);
      case TermKind::kVar:
        throw StuckError("unbound variable '" + e.name() + "'", e);
      case TermKind::kSlot:
        throw StuckError("evaluation reached a context hole", e);
      case TermKind::kUnit:
      case TermKind::kLam:
        return e;
      case TermKind::kInl:
      case TermKind::kInr:
      case TermKind::kRoll:
        return e.with_children({eval_value(e.child(0), fuel)});
      case TermKind::kPair: {
        Term a = eval_value(e.first(), fuel);
        Term b = eval_value(e.second(), fuel);
        return e.with_children({std::move(a), std::move(b)});
      }
      case TermKind::kApp: {
        Term f = eval_value(e.fn(), fuel);
        Term a = eval_value(e.arg(), fuel);
        if (!f.is(TermKind::kLam)) {
          throw StuckError("application of a non-function", f);
        }
        fuel.consume(e);
        e = subst(f.body(), a, f.binder());
        check_size(e);
        continue;
      }
      case TermKind::kMatchSum: {
        Term s = eval_value(e.scrutinee(), fuel);
        if (s.is(TermKind::kInl)) {
          fuel.consume(e);
          e = subst(e.left(), s.child(0), e.name());
        } else if (s.is(TermKind::kInr)) {
          fuel.consume(e);
          e = subst(e.right(), s.child(0), e.name2());
        } else {
          throw StuckError("match on a value that is not an injection", s);
        }
        check_size(e);
        continue;
      }
      case TermKind::kMatchPair: {
        Term s = eval_value(e.scrutinee(), fuel);
        if (!s.is(TermKind::kPair)) {
          throw StuckError("pair pattern on a value that is not a pair", s);
        }
        fuel.consume(e);
        e = Substituter({{e.name(), s.first()}, {e.name2(), s.second()}})
                .run(e.body());
        check_size(e);
        continue;
      }
      case TermKind::kUnroll: {
        Term s = eval_value(e.child(0), fuel);
        if (!s.is(TermKind::kRoll)) {
          throw StuckError("unroll of a value that is not rolled", s);
        }
        fuel.consume(e);
        return s.child(0);
      }
    }
  }
}

EvalOutcome eval(const Term& e, std::uint64_t steps) {
  Fuel fuel(steps);
  try {
    return Val{eval_value(e, fuel)};
  } catch (const StuckError& err) {
    return Stuck{err.reason(), err.at()};
  } catch (const OutOfFuelError& err) {
    return OutOfFuel{err.at()};
  }
}

// ---------------------------------------------------------------------------
// Delta substitution

namespace {

std::vector<std::string> delta_binders(const Delta& d, std::size_t i) {
  if (d.is(DeltaKind::kLam)) return {d.name()};
  if (d.is(DeltaKind::kMatch)) {
    if (i == 1) return {d.name()};
    if (i == 2) return {d.name2()};
  }
  return {};
}

bool contains(const std::vector<std::string>& names, const std::string& x) {
  return std::find(names.begin(), names.end(), x) != names.end();
}

class DeltaSubstituter {
 public:
  DeltaSubstituter(Delta dv, std::string x)
      : dv_(std::move(dv)),
        v_(src(dv_)),
        v2_(tgt(dv_)),
        x_(std::move(x)),
        eps_(dv_.is(DeltaKind::kEps)) {
    free_ = free_vars(v_);
    NameSet f2 = free_vars(v2_);
    free_.insert(f2.begin(), f2.end());
  }

  Delta go(const Delta& d) const {
    switch (d.kind()) {
      case DeltaKind::kEps: {
        const Term& e = d.term();
        if (!is_free_in(x_, e)) return d;
        if (eps_) return Delta::eps(subst(e, v_, x_));
        if (e.is(TermKind::kVar)) return dv_;
        if (auto pushed = push_eps(d)) return go(*pushed);
        return fallback(d);
      }
      case DeltaKind::kReplace:
        return Delta::replace(subst(d.term(), v_, x_),
                              subst(d.term2(), v2_, x_));
      case DeltaKind::kVarReplace: {
        const bool from = d.name() == x_, to = d.name2() == x_;
        if (from && to) return dv_;
        if (from) return Delta::replace(v_, Term::var(d.name2()));
        if (to) return Delta::replace(Term::var(d.name()), v2_);
        return d;
      }
      case DeltaKind::kIns:
      case DeltaKind::kDel:
        return frame(d);
      default:
        break;
    }
    std::vector<Delta> kids;
    kids.reserve(d.arity());
    for (std::size_t i = 0; i < d.arity(); ++i) {
      const Delta& c = d.child(i);
      const auto binders = delta_binders(d, i);
      if (contains(binders, x_)) {
        kids.push_back(c);
        continue;
      }
      if (captures(binders) &&
          (is_free_in(x_, src(c)) || is_free_in(x_, tgt(c)))) {
        return fallback(d);
      }
      kids.push_back(go(c));
    }
    return d.with_children(std::move(kids));
  }

 private:
  bool captures(const std::vector<std::string>& binders) const {
    for (const auto& b : binders) {
      if (free_.count(b) > 0) return true;
    }
    return false;
  }

  // Inserted material lives only in the target, deleted material only in the
  // source, so siblings take v2 or v respectively. A frame that rebinds x
  // over its hole leaves that side of the inner delta unsubstituted, which is
  // what the replacements x ~> v2 (deletion) or v ~> x (insertion) achieve.
  Delta frame(const Delta& d) const {
    if (!d.frame().is_frame()) return go(decompose(d));
    const bool ins = d.is(DeltaKind::kIns);
    const Term& f = d.frame().term();
    const auto binders = binders_over(f, d.frame().slot_child());
    Context f2(subst(f, ins ? v2_ : v_, x_));
    if (contains(binders, x_)) {
      Delta rebound = ins ? Delta::replace(v_, Term::var(x_))
                          : Delta::replace(Term::var(x_), v2_);
      Delta inner = DeltaSubstituter(std::move(rebound), x_).go(d.inner());
      return ins ? Delta::ins(std::move(f2), std::move(inner))
                 : Delta::del(std::move(f2), std::move(inner));
    }
    if (captures(binders)) return fallback(d);
    Delta inner = go(d.inner());
    return ins ? Delta::ins(std::move(f2), std::move(inner))
               : Delta::del(std::move(f2), std::move(inner));
  }

  Delta fallback(const Delta& d) const {
    return Delta::replace(subst(src(d), v_, x_), subst(tgt(d), v2_, x_));
  }

  Delta dv_;
  Term v_;
  Term v2_;
  std::string x_;
  bool eps_;
  NameSet free_;
};

}  // namespace

Delta delta_subst(const Delta& d, const Delta& dv, const std::string& x) {
  return DeltaSubstituter(dv, x).go(d);
}

// ---------------------------------------------------------------------------
// Delta evaluation

namespace {

std::optional<Delta> view_under(const Delta& dv, DeltaKind cong,
                                TermKind shape) {
  if (dv.is(cong)) return dv.inner();
  if (dv.is(DeltaKind::kEps) && dv.term().is(shape)) {
    return Delta::eps(dv.term().child(0));
  }
  return std::nullopt;
}

struct LamView {
  std::string binder;
  Delta body;
};

std::optional<LamView> view_lam(const Delta& dv) {
  if (dv.is(DeltaKind::kLam)) return LamView{dv.name(), dv.inner()};
  if (dv.is(DeltaKind::kEps) && dv.term().is(TermKind::kLam)) {
    return LamView{dv.term().binder(), Delta::eps(dv.term().body())};
  }
  return std::nullopt;
}

bool is_frame_of(const Delta& d, TermKind kind) {
  return d.frame().term().is(kind);
}

class DeltaEvaluator {
 public:
  DeltaEvaluator(Fuel& fuel, RuleStats* stats) : fuel_(fuel), stats_(stats) {}

  Delta run(const Delta& d) {
    switch (d.kind()) {
      case DeltaKind::kEps:
        hit(Rule::kEps);
        return Delta::eps(value(d.term(), Endpoint::kBoth));
      case DeltaKind::kReplace: {
        hit(Rule::kReplace);
        Term a = value(d.term(), Endpoint::kSource);
        return Delta::replace(std::move(a), value(d.term2(), Endpoint::kTarget));
      }
      case DeltaKind::kVarReplace:
        return fallback(d);
      case DeltaKind::kLam:
        hit(Rule::kLamValue);
        return d;
      case DeltaKind::kInl:
        hit(Rule::kInlCong);
        return Delta::inl(run(d.inner()));
      case DeltaKind::kInr:
        hit(Rule::kInrCong);
        return Delta::inr(run(d.inner()));
      case DeltaKind::kInlBang:
        hit(Rule::kInlBang);
        return Delta::inl_bang(run(d.inner()));
      case DeltaKind::kInrBang:
        hit(Rule::kInrBang);
        return Delta::inr_bang(run(d.inner()));
      case DeltaKind::kRoll:
        hit(Rule::kRollCong);
        return Delta::roll(run(d.inner()));
      case DeltaKind::kPair: {
        hit(Rule::kPairCong);
        Delta a = run(d.child(0));
        return Delta::pair(std::move(a), run(d.child(1)));
      }
      case DeltaKind::kMatch:
        return match(d);
      case DeltaKind::kApp:
        return app(d);
      case DeltaKind::kUnroll:
        return unroll(d);
      case DeltaKind::kIns:
      case DeltaKind::kDel:
        return framed(d);
    }
    return fallback(d);
  }

 private:
  void hit(Rule r) {
    if (stats_ != nullptr) stats_->hit(r);
  }

  Term value(const Term& e, Endpoint which) {
    try {
      return eval_value(e, fuel_);
    } catch (const StuckError& err) {
      throw DeltaEvalError(which, DeltaEvalError::Cause::kStuck, err.reason(),
                           err.at());
    } catch (const OutOfFuelError& err) {
      throw DeltaEvalError(which, DeltaEvalError::Cause::kOutOfFuel, "",
                           err.at());
    }
  }

  void step(const Term& at, Endpoint which) {
    try {
      fuel_.consume(at);
    } catch (const OutOfFuelError&) {
      throw DeltaEvalError(which, DeltaEvalError::Cause::kOutOfFuel, "", at);
    }
  }

  [[noreturn]] void stuck(Endpoint which, std::string reason, const Term& at) {
    throw DeltaEvalError(which, DeltaEvalError::Cause::kStuck,
                         std::move(reason), at);
  }

  // Value-level eliminations, used to finish one endpoint by itself.
  Term beta(const Term& f, const Term& a, Endpoint which) {
    if (!f.is(TermKind::kLam)) stuck(which, "application of a non-function", f);
    step(f, which);
    return value(subst(f.body(), a, f.binder()), which);
  }

  Term select(const Term& s, const Term& match_term, Endpoint which) {
    if (s.is(TermKind::kInl)) {
      step(match_term, which);
      return value(subst(match_term.left(), s.child(0), match_term.name()),
                   which);
    }
    if (s.is(TermKind::kInr)) {
      step(match_term, which);
      return value(subst(match_term.right(), s.child(0), match_term.name2()),
                   which);
    }
    stuck(which, "match on a value that is not an injection", s);
  }

  Term unrolled(const Term& s, Endpoint which) {
    if (!s.is(TermKind::kRoll)) {
      stuck(which, "unroll of a value that is not rolled", s);
    }
    step(s, which);
    return s.child(0);
  }

  Delta fallback(const Delta& d) {
    hit(Rule::kFallback);
    Term a = value(src(d), Endpoint::kSource);
    return Delta::replace(std::move(a), value(tgt(d), Endpoint::kTarget));
  }

  Delta substituted(const Delta& body, const Delta& dv, const std::string& x) {
    return run(delta_subst(body, dv, x));
  }

  Delta match(const Delta& d) {
    Delta scrut = run(d.child(0));
    const Term both = src(d);
    if (auto a = view_under(scrut, DeltaKind::kInl, TermKind::kInl)) {
      hit(Rule::kMatchInl);
      step(both, Endpoint::kBoth);
      return substituted(d.child(1), *a, d.name());
    }
    if (auto a = view_under(scrut, DeltaKind::kInr, TermKind::kInr)) {
      hit(Rule::kMatchInr);
      step(both, Endpoint::kBoth);
      return substituted(d.child(2), *a, d.name2());
    }
    if (scrut.is(DeltaKind::kInlBang)) {
      hit(Rule::kMatchBangInl);
    } else if (scrut.is(DeltaKind::kInrBang)) {
      hit(Rule::kMatchBangInr);
    } else if (scrut.is(DeltaKind::kIns) && scrut.frame().is_frame() &&
               (is_frame_of(scrut, TermKind::kInl) ||
                is_frame_of(scrut, TermKind::kInr))) {
      // The target scrutinee gained a tag. If the source already carried the
      // same tag, both runs take the same branch and can share a delta.
      const bool inl = is_frame_of(scrut, TermKind::kInl);
      hit(inl ? Rule::kMatchScrutInsInl : Rule::kMatchScrutInsInr);
      const Term s = src(scrut);
      if (s.is(inl ? TermKind::kInl : TermKind::kInr)) {
        step(both, Endpoint::kBoth);
        Delta bound = Delta::replace(s.child(0), tgt(scrut.inner()));
        Delta out = inl ? substituted(d.child(1), bound, d.name())
                        : substituted(d.child(2), bound, d.name2());
        return Delta::replace(src(out), tgt(out));
      }
    } else {
      hit(Rule::kFallback);
    }
    Term a = select(src(scrut), src(d), Endpoint::kSource);
    return Delta::replace(std::move(a),
                          select(tgt(scrut), tgt(d), Endpoint::kTarget));
  }

  Delta app(const Delta& d) {
    Delta fn = run(d.child(0));
    Delta arg = run(d.child(1));
    if (auto lam = view_lam(fn)) {
      hit(Rule::kAppCong);
      step(src(d), Endpoint::kBoth);
      return substituted(lam->body, arg, lam->binder);
    }
    hit(Rule::kFallback);
    Term a = beta(src(fn), src(arg), Endpoint::kSource);
    return Delta::replace(std::move(a),
                          beta(tgt(fn), tgt(arg), Endpoint::kTarget));
  }

  Delta unroll(const Delta& d) {
    Delta inner = run(d.inner());
    if (auto a = view_under(inner, DeltaKind::kRoll, TermKind::kRoll)) {
      hit(Rule::kUnrollCong);
      step(src(d), Endpoint::kBoth);
      return *a;
    }
    hit(Rule::kFallback);
    Term a = unrolled(src(inner), Endpoint::kSource);
    return Delta::replace(std::move(a), unrolled(tgt(inner), Endpoint::kTarget));
  }

  Delta framed(const Delta& d) {
    if (!d.frame().is_frame()) return run(decompose(d));
    const bool ins = d.is(DeltaKind::kIns);
    const Context& c = d.frame();
    const Term& f = c.term();
    const std::size_t hole = c.slot_child();
    // The frame exists only on this side.
    const Endpoint side = ins ? Endpoint::kTarget : Endpoint::kSource;
    auto wrap = [&](Context frame, Delta inner) {
      return ins ? Delta::ins(std::move(frame), std::move(inner))
                 : Delta::del(std::move(frame), std::move(inner));
    };
    switch (f.kind()) {
      case TermKind::kInl:
        hit(ins ? Rule::kInlIns : Rule::kInlDel);
        return wrap(c, run(d.inner()));
      case TermKind::kInr:
        hit(ins ? Rule::kInrIns : Rule::kInrDel);
        return wrap(c, run(d.inner()));
      case TermKind::kRoll:
        hit(ins ? Rule::kRollIns : Rule::kRollDel);
        return wrap(c, run(d.inner()));
      case TermKind::kPair: {
        // "left"/"right" name the side of the plain sibling.
        const bool sibling_left = hole == 1;
        if (ins) {
          hit(sibling_left ? Rule::kPairInsLeft : Rule::kPairInsRight);
        } else {
          hit(sibling_left ? Rule::kPairDelLeft : Rule::kPairDelRight);
        }
        const Term& sib = f.child(1 - hole);
        Term sv = Term::unit();
        Delta inner = d.inner();
        if (sibling_left) {
          sv = value(sib, side);
          inner = run(inner);
        } else {
          inner = run(inner);
          sv = value(sib, side);
        }
        Context frame(sibling_left ? Term::pair(sv, Term::slot())
                                   : Term::pair(Term::slot(), sv));
        return wrap(std::move(frame), std::move(inner));
      }
      case TermKind::kApp: {
        const bool fn_plain = hole == 1;
        if (ins) {
          hit(fn_plain ? Rule::kAppInsLeft : Rule::kAppInsRight);
        } else {
          hit(fn_plain ? Rule::kAppDelLeft : Rule::kAppDelRight);
        }
        Term other = Term::unit();
        Delta dv = d.inner();
        if (fn_plain) {
          other = value(f.child(0), side);
          dv = run(dv);
        } else {
          dv = run(dv);
          other = value(f.child(1), side);
        }
        const Term near = ins ? tgt(dv) : src(dv);
        Term out = fn_plain ? beta(other, near, side) : beta(near, other, side);
        return ins ? Delta::replace(src(dv), std::move(out))
                   : Delta::replace(std::move(out), tgt(dv));
      }
      case TermKind::kMatchSum: {
        if (hole != 0) break;
        hit(ins ? Rule::kMatchIns : Rule::kMatchDel);
        Delta dv = run(d.inner());
        Term out = select(ins ? tgt(dv) : src(dv), f, side);
        return ins ? Delta::replace(src(dv), std::move(out))
                   : Delta::replace(std::move(out), tgt(dv));
      }
      case TermKind::kUnroll: {
        Delta dv = run(d.inner());
        if (ins) {
          hit(Rule::kUnrollIns);
          Term rolled = unrolled(tgt(dv), side);
          return compose(dv, Delta::del(Context(Term::roll(Term::slot())),
                                        Delta::eps(std::move(rolled))));
        }
        hit(Rule::kUnrollDel);
        Term rolled = unrolled(src(dv), side);
        if (dv.is(DeltaKind::kDel) && dv.frame().term().is(TermKind::kRoll)) {
          return dv.inner();
        }
        return compose(Delta::ins(Context(Term::roll(Term::slot())),
                                  Delta::eps(std::move(rolled))),
                       dv);
      }
      case TermKind::kLam:
        // The framed side is a lambda, hence already a value.
        if (is_value(ins ? src(d) : tgt(d))) {
          hit(Rule::kLamValue);
          return d;
        }
        break;
      default:
        break;
    }
    return fallback(d);
  }

  Fuel& fuel_;
  RuleStats* stats_;
};

}  // namespace

Delta delta_eval(const Delta& d, Fuel& fuel, RuleStats* stats) {
  return DeltaEvaluator(fuel, stats).run(decompose(d));
}

Delta delta_eval(const Delta& d, std::uint64_t steps, RuleStats* stats) {
  Fuel fuel(steps);
  return delta_eval(d, fuel, stats);
}

}  // namespace ilc
