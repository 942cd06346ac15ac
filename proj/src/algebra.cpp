#include "ilc/algebra.hpp"

#include <utility>

namespace ilc {

NotComposable::NotComposable(Term first_target, Term second_source)
    : Error("deltas are not composable: target of the first differs from "
            "source of the second"),
      first_target_(std::move(first_target)),
      second_source_(std::move(second_source)) {}

std::string_view equation_name(Equation eq) {
  switch (eq) {
    case Equation::kEpsLeft: return "eps-left";
    case Equation::kEpsRight: return "eps-right";
    case Equation::kInsDel: return "ins-del";
    case Equation::kInsCong: return "ins-cong";
    case Equation::kCongDel: return "cong-del";
    case Equation::kInlBangInrBang: return "inl!-inr!";
    case Equation::kInrBangInlBang: return "inr!-inl!";
  }
  return "?";
}

namespace {

Delta compose_rec(const Delta& d1, const Delta& d2);

std::optional<Delta> rewrite_rec(Equation eq, const Delta& d1,
                                 const Delta& d2) {
  switch (eq) {
    case Equation::kEpsLeft:
      if (d1.is(DeltaKind::kEps)) return d2;
      return std::nullopt;
    case Equation::kEpsRight:
      if (d2.is(DeltaKind::kEps)) return d1;
      return std::nullopt;
    case Equation::kInsDel:
      // Binder names in the frames must agree literally, otherwise the inner
      // endpoints are only related up to a renaming.
      if (d1.is(DeltaKind::kIns) && d2.is(DeltaKind::kDel) &&
          d1.frame() == d2.frame()) {
        return compose_rec(d1.inner(), d2.inner());
      }
      return std::nullopt;
    case Equation::kInsCong:
      if (d1.is(DeltaKind::kIns)) {
        if (auto b = strip_spine(d1.frame(), d2)) {
          return Delta::ins(d1.frame(), compose_rec(d1.inner(), *b));
        }
      }
      return std::nullopt;
    case Equation::kCongDel:
      if (d2.is(DeltaKind::kDel)) {
        if (auto a = strip_spine(d2.frame(), d1)) {
          return Delta::del(d2.frame(), compose_rec(*a, d2.inner()));
        }
      }
      return std::nullopt;
    case Equation::kInlBangInrBang:
      // inr (src d) ~> inr (tgt d'): the outer constructor survives.
      if (d1.is(DeltaKind::kInlBang) && d2.is(DeltaKind::kInrBang)) {
        return Delta::inr(compose_rec(d1.inner(), d2.inner()));
      }
      return std::nullopt;
    case Equation::kInrBangInlBang:
      if (d1.is(DeltaKind::kInrBang) && d2.is(DeltaKind::kInlBang)) {
        return Delta::inl(compose_rec(d1.inner(), d2.inner()));
      }
      return std::nullopt;
  }
  return std::nullopt;
}

Delta compose_rec(const Delta& d1, const Delta& d2) {
  for (Equation eq : kAllEquations) {
    if (auto r = rewrite_rec(eq, d1, d2)) return *r;
  }
  if (d1.is_congruence() && d1.kind() == d2.kind() &&
      d1.names() == d2.names()) {
    std::vector<Delta> kids;
    for (std::size_t i = 0; i < d1.arity(); ++i) {
      kids.push_back(compose_rec(d1.child(i), d2.child(i)));
    }
    return d1.with_children(std::move(kids));
  }
  // A congruence on one side of a constructor flip folds into the flip.
  const DeltaKind k1 = d1.kind(), k2 = d2.kind();
  if ((k1 == DeltaKind::kInl && k2 == DeltaKind::kInrBang) ||
      (k1 == DeltaKind::kInr && k2 == DeltaKind::kInlBang) ||
      (k1 == DeltaKind::kInlBang && k2 == DeltaKind::kInl) ||
      (k1 == DeltaKind::kInrBang && k2 == DeltaKind::kInr)) {
    Delta inner = compose_rec(d1.inner(), d2.inner());
    const bool to_inl = k2 == DeltaKind::kInlBang || k2 == DeltaKind::kInl;
    return to_inl ? Delta::inl_bang(std::move(inner))
                  : Delta::inr_bang(std::move(inner));
  }
  if (d1.is(DeltaKind::kDel)) {
    return Delta::del(d1.frame(), compose_rec(d1.inner(), d2));
  }
  if (d2.is(DeltaKind::kIns)) {
    return Delta::ins(d2.frame(), compose_rec(d1, d2.inner()));
  }
  return Delta::replace(src(d1), tgt(d2));
}

void require_composable(const Delta& d1, const Delta& d2) {
  Term t = tgt(d1), s = src(d2);
  if (!alpha_eq(t, s)) throw NotComposable(std::move(t), std::move(s));
}

void require_coinitial(const Delta& d1, const Delta& d2) {
  if (!alpha_eq(src(d1), src(d2))) {
    throw NotCoinitial("deltas do not share a source");
  }
}

bool same_frame(const Context& a, const Context& b) {
  return alpha_eq(a, b) && a.term().names() == b.term().names();
}

bool compatible_rec(const Delta& a, const Delta& b) {
  if (a.is(DeltaKind::kEps)) return true;
  if (a.is(DeltaKind::kIns)) return compatible_rec(a.inner(), b);
  if (a.is(DeltaKind::kDel)) {
    return b.is(DeltaKind::kDel) && same_frame(a.frame(), b.frame()) &&
           compatible_rec(a.inner(), b.inner());
  }
  if (a.is_congruence() && a.kind() == b.kind() && a.names() == b.names()) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!compatible_rec(a.child(i), b.child(i))) return false;
    }
    return true;
  }
  return false;
}

Delta residual_rec(const Delta& a, const Delta& b) {
  if (a.is(DeltaKind::kEps)) return Delta::eps(tgt(b));
  if (b.is(DeltaKind::kEps)) return a;
  if (a.is(DeltaKind::kLam) && b.is(DeltaKind::kLam) &&
      a.name() == b.name()) {
    return Delta::lam(a.name(), residual_rec(a.inner(), b.inner()));
  }
  if (a.is(DeltaKind::kIns)) {
    return Delta::ins(a.frame(), residual_rec(a.inner(), b));
  }
  if (b.is(DeltaKind::kIns)) {
    if (auto r = spine(b.frame(), residual_rec(a, b.inner()))) return *r;
    throw UndefinedResidual("no congruence over the inserted frame");
  }
  if (a.is_congruence() && a.kind() == b.kind() && a.names() == b.names()) {
    std::vector<Delta> kids;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      kids.push_back(residual_rec(a.child(i), b.child(i)));
    }
    return a.with_children(std::move(kids));
  }
  if (a.is(DeltaKind::kDel) && b.is(DeltaKind::kDel) &&
      same_frame(a.frame(), b.frame())) {
    return residual_rec(a.inner(), b.inner());
  }
  throw UndefinedResidual(std::string("no residual of a ") +
                          std::string(kind_name(a.kind())) + " delta after a " +
                          std::string(kind_name(b.kind())) + " delta");
}

}  // namespace

std::optional<Delta> rewrite(Equation eq, const Delta& d1, const Delta& d2) {
  require_composable(d1, d2);
  return rewrite_rec(eq, d1, d2);
}

Delta compose(const Delta& d1, const Delta& d2) {
  require_composable(d1, d2);
  return compose_rec(d1, d2);
}

bool compatible(const Delta& d1, const Delta& d2) {
  require_coinitial(d1, d2);
  return compatible_rec(decompose(d1), decompose(d2));
}

Delta residual(const Delta& d1, const Delta& d2) {
  require_coinitial(d1, d2);
  if (d2.is(DeltaKind::kEps)) return d1;
  Delta a = decompose(d1), b = decompose(d2);
  if (!a.is(DeltaKind::kEps) && !b.is(DeltaKind::kEps) &&
      !compatible_rec(a, b)) {
    throw NotCompatible("first delta is not compatible with the second");
  }
  return residual_rec(a, b);
}

}  // namespace ilc
