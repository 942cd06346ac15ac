#include "ilc/delta.hpp"

#include <functional>
#include <utility>

namespace ilc {

std::string_view kind_name(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kEps: return "eps";
    case DeltaKind::kIns: return "ins";
    case DeltaKind::kDel: return "del";
    case DeltaKind::kInl: return "inl";
    case DeltaKind::kInr: return "inr";
    case DeltaKind::kInlBang: return "inlbang";
    case DeltaKind::kInrBang: return "inrbang";
    case DeltaKind::kMatch: return "match";
    case DeltaKind::kPair: return "pair";
    case DeltaKind::kLam: return "lam";
    case DeltaKind::kApp: return "app";
    case DeltaKind::kRoll: return "roll";
    case DeltaKind::kUnroll: return "unroll";
    case DeltaKind::kReplace: return "replace";
    case DeltaKind::kVarReplace: return "varreplace";
  }
  return "?";
}

std::optional<DeltaKind> congruence_of(TermKind kind) {
  switch (kind) {
    case TermKind::kInl: return DeltaKind::kInl;
    case TermKind::kInr: return DeltaKind::kInr;
    case TermKind::kMatchSum: return DeltaKind::kMatch;
    case TermKind::kPair: return DeltaKind::kPair;
    case TermKind::kLam: return DeltaKind::kLam;
    case TermKind::kApp: return DeltaKind::kApp;
    case TermKind::kRoll: return DeltaKind::kRoll;
    case TermKind::kUnroll: return DeltaKind::kUnroll;
    default: return std::nullopt;
  }
}

std::optional<TermKind> congruence_shape(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kInl: return TermKind::kInl;
    case DeltaKind::kInr: return TermKind::kInr;
    case DeltaKind::kMatch: return TermKind::kMatchSum;
    case DeltaKind::kPair: return TermKind::kPair;
    case DeltaKind::kLam: return TermKind::kLam;
    case DeltaKind::kApp: return TermKind::kApp;
    case DeltaKind::kRoll: return TermKind::kRoll;
    case DeltaKind::kUnroll: return TermKind::kUnroll;
    default: return std::nullopt;
  }
}

namespace {

std::pair<Term, Term> endpoints_of(DeltaKind kind,
                                   const std::array<Term, 2>& terms,
                                   const std::optional<Context>& frame,
                                   const std::array<std::string, 2>& names,
                                   const std::vector<Delta>& children) {
  switch (kind) {
    case DeltaKind::kEps:
      return {terms[0], terms[0]};
    case DeltaKind::kReplace:
      return {terms[0], terms[1]};
    case DeltaKind::kVarReplace:
      return {Term::var(names[0]), Term::var(names[1])};
    case DeltaKind::kIns:
      return {src(children[0]), plug(*frame, tgt(children[0]))};
    case DeltaKind::kDel:
      return {plug(*frame, src(children[0])), tgt(children[0])};
    case DeltaKind::kInlBang:
      return {Term::inr(src(children[0])), Term::inl(tgt(children[0]))};
    case DeltaKind::kInrBang:
      return {Term::inl(src(children[0])), Term::inr(tgt(children[0]))};
    default:
      break;
  }
  const TermKind shape = *congruence_shape(kind);
  std::vector<Term> s, t;
  for (const Delta& c : children) {
    s.push_back(src(c));
    t.push_back(tgt(c));
  }
  return {Term::make(shape, names, std::move(s)),
          Term::make(shape, names, std::move(t))};
}

}  // namespace

// Endpoints are computed eagerly so src/tgt are O(1).
Delta Delta::make(DeltaKind kind, std::array<Term, 2> terms,
                  std::optional<Context> frame,
                  std::array<std::string, 2> names,
                  std::vector<Delta> children) {
  auto [source, target] = endpoints_of(kind, terms, frame, names, children);
  return Delta(std::make_shared<const Node>(
      Node{kind, std::move(terms), std::move(frame), std::move(names),
           std::move(children), std::move(source), std::move(target)}));
}

namespace {

const std::array<Term, 2> kNoTerms{Term::unit(), Term::unit()};

void require_name(const std::string& n) {
  if (n.empty()) throw std::invalid_argument("empty identifier in delta");
}

}  // namespace

Delta Delta::eps(Term at) {
  return make(DeltaKind::kEps, {std::move(at), Term::unit()}, std::nullopt, {},
              {});
}
Delta Delta::ins(Context frame, Delta inner) {
  return make(DeltaKind::kIns, kNoTerms, std::move(frame), {},
              {std::move(inner)});
}
Delta Delta::del(Context frame, Delta inner) {
  return make(DeltaKind::kDel, kNoTerms, std::move(frame), {},
              {std::move(inner)});
}
Delta Delta::inl(Delta inner) {
  return make(DeltaKind::kInl, kNoTerms, std::nullopt, {}, {std::move(inner)});
}
Delta Delta::inr(Delta inner) {
  return make(DeltaKind::kInr, kNoTerms, std::nullopt, {}, {std::move(inner)});
}
Delta Delta::inl_bang(Delta inner) {
  return make(DeltaKind::kInlBang, kNoTerms, std::nullopt, {},
              {std::move(inner)});
}
Delta Delta::inr_bang(Delta inner) {
  return make(DeltaKind::kInrBang, kNoTerms, std::nullopt, {},
              {std::move(inner)});
}
Delta Delta::match(Delta scrutinee, std::string xl, Delta left, std::string xr,
                   Delta right) {
  require_name(xl);
  require_name(xr);
  return make(DeltaKind::kMatch, kNoTerms, std::nullopt,
              {std::move(xl), std::move(xr)},
              {std::move(scrutinee), std::move(left), std::move(right)});
}
Delta Delta::pair(Delta first, Delta second) {
  return make(DeltaKind::kPair, kNoTerms, std::nullopt, {},
              {std::move(first), std::move(second)});
}
Delta Delta::lam(std::string binder, Delta body) {
  require_name(binder);
  return make(DeltaKind::kLam, kNoTerms, std::nullopt, {std::move(binder), ""},
              {std::move(body)});
}
Delta Delta::app(Delta fn, Delta arg) {
  return make(DeltaKind::kApp, kNoTerms, std::nullopt, {},
              {std::move(fn), std::move(arg)});
}
Delta Delta::roll(Delta inner) {
  return make(DeltaKind::kRoll, kNoTerms, std::nullopt, {}, {std::move(inner)});
}
Delta Delta::unroll(Delta inner) {
  return make(DeltaKind::kUnroll, kNoTerms, std::nullopt, {},
              {std::move(inner)});
}
Delta Delta::replace(Term from, Term to) {
  return make(DeltaKind::kReplace, {std::move(from), std::move(to)},
              std::nullopt, {}, {});
}
Delta Delta::var_replace(std::string from, std::string to) {
  require_name(from);
  require_name(to);
  return make(DeltaKind::kVarReplace, kNoTerms, std::nullopt,
              {std::move(from), std::move(to)}, {});
}

Delta Delta::congruence(const Term& shape, std::vector<Delta> children) {
  auto kind = congruence_of(shape.kind());
  if (!kind) {
    throw std::invalid_argument("no congruence delta for " +
                                std::string(kind_name(shape.kind())));
  }
  if (children.size() != shape.arity()) {
    throw std::invalid_argument("wrong number of congruence children");
  }
  return make(*kind, kNoTerms, std::nullopt, shape.names(),
              std::move(children));
}

DeltaKind Delta::kind() const { return node_->kind; }
const Term& Delta::term() const { return node_->terms[0]; }
const Term& Delta::term2() const { return node_->terms[1]; }
const Context& Delta::frame() const { return node_->frame.value(); }
const std::string& Delta::name() const { return node_->names[0]; }
const std::string& Delta::name2() const { return node_->names[1]; }
const std::array<std::string, 2>& Delta::names() const { return node_->names; }
std::size_t Delta::arity() const { return node_->children.size(); }
const Delta& Delta::child(std::size_t i) const { return node_->children.at(i); }
const std::vector<Delta>& Delta::children() const { return node_->children; }

Delta Delta::with_children(std::vector<Delta> children) const {
  bool same = children.size() == arity();
  for (std::size_t i = 0; same && i < children.size(); ++i) {
    same = children[i].node_ == child(i).node_;
  }
  if (same) return *this;
  return make(kind(), node_->terms, node_->frame, names(), std::move(children));
}

std::uint64_t Delta::size() const {
  std::uint64_t n = 1;
  if (is(DeltaKind::kIns) || is(DeltaKind::kDel)) n += frame().size();
  if (is(DeltaKind::kReplace)) n += term2().size();
  for (const Delta& c : children()) n += c.size();
  return n;
}

bool operator==(const Delta& a, const Delta& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.names() != b.names() ||
      a.arity() != b.arity()) {
    return false;
  }
  switch (a.kind()) {
    case DeltaKind::kEps:
      if (a.term() != b.term()) return false;
      break;
    case DeltaKind::kReplace:
      if (a.term() != b.term() || a.term2() != b.term2()) return false;
      break;
    case DeltaKind::kIns:
    case DeltaKind::kDel:
      if (!(a.frame() == b.frame())) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.child(i) != b.child(i)) return false;
  }
  return true;
}

EndpointMismatch::EndpointMismatch(Term expected_source, Term actual)
    : Error("delta does not apply: its source differs from the given term"),
      expected_(std::move(expected_source)),
      actual_(std::move(actual)) {}

Term src(const Delta& d) { return d.node_->source; }
Term tgt(const Delta& d) { return d.node_->target; }

Term apply(const Term& e, const Delta& d) {
  Term s = src(d);
  if (!alpha_eq(s, e)) throw EndpointMismatch(s, e);
  return tgt(d);
}

bool check_valid(const Delta& d, const Term& e) { return alpha_eq(src(d), e); }

namespace {

// Pre-order search for an occurrence of `needle` inside `hay` (excluding the
// root) whose free variables are not captured on the way down.
std::optional<Context> find_occurrence(const Term& hay, const Term& needle,
                                       const NameSet& needle_free) {
  std::function<std::optional<Term>(const Term&, std::vector<std::string>&,
                                    bool)>
      search = [&](const Term& t, std::vector<std::string>& bound,
                   bool root) -> std::optional<Term> {
    if (!root && alpha_eq(t, needle)) {
      bool captured = false;
      for (const auto& b : bound) captured |= needle_free.count(b) > 0;
      if (!captured) return Term::slot();
    }
    if (t.size() <= needle.size()) return std::nullopt;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      auto names = binders_over(t, i);
      bound.insert(bound.end(), names.begin(), names.end());
      auto sub = search(t.child(i), bound, false);
      bound.resize(bound.size() - names.size());
      if (sub) {
        std::vector<Term> kids = t.children();
        kids[i] = *sub;
        return t.with_children(std::move(kids));
      }
    }
    return std::nullopt;
  };
  std::vector<std::string> bound;
  auto found = search(hay, bound, true);
  if (!found) return std::nullopt;
  return Context(*found);
}

}  // namespace

Delta diff(const Term& e, const Term& e2) {
  if (alpha_eq(e, e2)) return Delta::eps(e);
  if (e.kind() == e2.kind() && e.names() == e2.names() &&
      congruence_of(e.kind())) {
    std::vector<Delta> kids;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      kids.push_back(diff(e.child(i), e2.child(i)));
    }
    return Delta::congruence(e, std::move(kids));
  }
  if (e.is(TermKind::kInl) && e2.is(TermKind::kInr)) {
    return Delta::inr_bang(diff(e.child(0), e2.child(0)));
  }
  if (e.is(TermKind::kInr) && e2.is(TermKind::kInl)) {
    return Delta::inl_bang(diff(e.child(0), e2.child(0)));
  }
  if (auto c = find_occurrence(e2, e, free_vars(e))) {
    return Delta::ins(*c, Delta::eps(e));
  }
  if (auto c = find_occurrence(e, e2, free_vars(e2))) {
    return Delta::del(*c, Delta::eps(e2));
  }
  if (e.is(TermKind::kVar) && e2.is(TermKind::kVar)) {
    return Delta::var_replace(e.name(), e2.name());
  }
  return Delta::replace(e, e2);
}

namespace {

Delta wrap_frames(DeltaKind kind, const Context& c, Delta inner) {
  if (c.is_empty()) return inner;
  auto [outer, rest] = c.split_outer();
  Delta wrapped = wrap_frames(kind, rest, std::move(inner));
  return kind == DeltaKind::kIns ? Delta::ins(outer, std::move(wrapped))
                                 : Delta::del(outer, std::move(wrapped));
}

}  // namespace

Delta decompose(const Delta& d) {
  if (d.is(DeltaKind::kIns) || d.is(DeltaKind::kDel)) {
    if (d.frame().is_frame()) {
      return d.with_children({decompose(d.inner())});
    }
    return wrap_frames(d.kind(), d.frame(), decompose(d.inner()));
  }
  if (d.arity() == 0) return d;
  std::vector<Delta> kids;
  kids.reserve(d.arity());
  for (const Delta& c : d.children()) kids.push_back(decompose(c));
  return d.with_children(std::move(kids));
}

std::optional<Delta> spine(const Context& c, const Delta& inner) {
  if (c.is_empty()) return inner;
  auto [outer, rest] = c.split_outer();
  auto sub = spine(rest, inner);
  if (!sub) return std::nullopt;
  const Term& f = outer.term();
  if (!congruence_of(f.kind())) return std::nullopt;
  const std::size_t hole = outer.slot_child();
  std::vector<Delta> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    kids.push_back(i == hole ? *sub : Delta::eps(f.child(i)));
  }
  return Delta::congruence(f, std::move(kids));
}

std::optional<Delta> strip_spine(const Context& c, const Delta& d) {
  if (c.is_empty()) return d;
  auto [outer, rest] = c.split_outer();
  const Term& f = outer.term();
  const std::size_t hole = outer.slot_child();
  if (d.is(DeltaKind::kEps)) {
    const Term& t = d.term();
    if (t.kind() != f.kind() || t.names() != f.names()) return std::nullopt;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (i != hole && !alpha_eq(t.child(i), f.child(i))) return std::nullopt;
    }
    return strip_spine(rest, Delta::eps(t.child(hole)));
  }
  auto shape = congruence_shape(d.kind());
  if (!shape || *shape != f.kind() || d.names() != f.names()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (i == hole) continue;
    const Delta& sib = d.child(i);
    if (!sib.is(DeltaKind::kEps) || !alpha_eq(sib.term(), f.child(i))) {
      return std::nullopt;
    }
  }
  return strip_spine(rest, d.child(hole));
}

std::optional<Delta> push_eps(const Delta& d) {
  if (!d.is(DeltaKind::kEps)) return std::nullopt;
  const Term& t = d.term();
  if (!congruence_of(t.kind())) return std::nullopt;
  std::vector<Delta> kids;
  for (const Term& c : t.children()) kids.push_back(Delta::eps(c));
  return Delta::congruence(t, std::move(kids));
}

bool eps_equivalent(const Delta& a, const Delta& b) {
  if (a == b) return true;
  if (a.is(DeltaKind::kEps) && b.is(DeltaKind::kEps)) {
    return a.term() == b.term();
  }
  if (a.is(DeltaKind::kEps) && b.is_congruence()) {
    auto pushed = push_eps(a);
    return pushed && eps_equivalent(*pushed, b);
  }
  if (b.is(DeltaKind::kEps) && a.is_congruence()) {
    auto pushed = push_eps(b);
    return pushed && eps_equivalent(a, *pushed);
  }
  if (a.kind() != b.kind() || a.names() != b.names() ||
      a.arity() != b.arity()) {
    return false;
  }
  if (a.is(DeltaKind::kReplace)) {
    return a.term() == b.term() && a.term2() == b.term2();
  }
  if ((a.is(DeltaKind::kIns) || a.is(DeltaKind::kDel)) &&
      !(a.frame() == b.frame())) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!eps_equivalent(a.child(i), b.child(i))) return false;
  }
  return true;
}

std::size_t count_kind(const Delta& d, DeltaKind k) {
  std::size_t n = d.is(k) ? 1 : 0;
  for (const Delta& c : d.children()) n += count_kind(c, k);
  return n;
}

}  // namespace ilc
