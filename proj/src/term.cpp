#include "ilc/term.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace ilc {

namespace {

constexpr std::uint64_t kSizeMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSizeMax - b ? kSizeMax : a + b;
}

std::size_t expected_arity(TermKind kind) {
  switch (kind) {
    case TermKind::kHole:
    case TermKind::kVar:
    case TermKind::kUnit:
    case TermKind::kSlot:
      return 0;
    case TermKind::kInl:
    case TermKind::kInr:
    case TermKind::kLam:
    case TermKind::kRoll:
    case TermKind::kUnroll:
      return 1;
    case TermKind::kPair:
    case TermKind::kApp:
    case TermKind::kMatchPair:
      return 2;
    case TermKind::kMatchSum:
      return 3;
  }
  return 0;
}

std::size_t expected_names(TermKind kind) {
  switch (kind) {
    case TermKind::kVar:
    case TermKind::kLam:
      return 1;
    case TermKind::kMatchSum:
    case TermKind::kMatchPair:
      return 2;
    default:
      return 0;
  }
}

thread_local std::uint64_t fresh_counter = 0;

}  // namespace

std::string_view kind_name(TermKind kind) {
  switch (kind) {
    case TermKind::kHole: return "hole";
    case TermKind::kVar: return "var";
    case TermKind::kUnit: return "unit";
    case TermKind::kInl: return "inl";
    case TermKind::kInr: return "inr";
    case TermKind::kMatchSum: return "match";
    case TermKind::kPair: return "pair";
    case TermKind::kMatchPair: return "matchpair";
    case TermKind::kLam: return "lam";
    case TermKind::kApp: return "app";
    case TermKind::kRoll: return "roll";
    case TermKind::kUnroll: return "unroll";
    case TermKind::kSlot: return "slot";
  }
  return "?";
}

Term Term::make(TermKind kind, std::array<std::string, 2> names,
                std::vector<Term> children) {
  if (children.size() != expected_arity(kind)) {
    throw std::invalid_argument("wrong number of children for " +
                                std::string(kind_name(kind)));
  }
  const std::size_t n = expected_names(kind);
  for (std::size_t i = 0; i < 2; ++i) {
    if (i < n && names[i].empty()) {
      throw std::invalid_argument("empty identifier in " +
                                  std::string(kind_name(kind)));
    }
    if (i >= n) names[i].clear();
  }
  if (kind == TermKind::kMatchPair && names[0] == names[1]) {
    throw std::invalid_argument("pair pattern binds '" + names[0] + "' twice");
  }
  std::uint64_t size = 1;
  for (const Term& c : children) size = saturating_add(size, c.size());
  return Term(std::make_shared<const Node>(
      Node{kind, std::move(names), std::move(children), size}));
}

Term Term::hole() {
  static const Term t = make(TermKind::kHole, {}, {});
  return t;
}
Term Term::var(std::string name) {
  return make(TermKind::kVar, {std::move(name), ""}, {});
}
Term Term::unit() {
  static const Term t = make(TermKind::kUnit, {}, {});
  return t;
}
Term Term::inl(Term body) { return make(TermKind::kInl, {}, {std::move(body)}); }
Term Term::inr(Term body) { return make(TermKind::kInr, {}, {std::move(body)}); }
Term Term::match_sum(Term scrutinee, std::string xl, Term left, std::string xr,
                     Term right) {
  return make(TermKind::kMatchSum, {std::move(xl), std::move(xr)},
              {std::move(scrutinee), std::move(left), std::move(right)});
}
Term Term::pair(Term first, Term second) {
  return make(TermKind::kPair, {}, {std::move(first), std::move(second)});
}
Term Term::match_pair(Term scrutinee, std::string x1, std::string x2,
                      Term body) {
  return make(TermKind::kMatchPair, {std::move(x1), std::move(x2)},
              {std::move(scrutinee), std::move(body)});
}
Term Term::lam(std::string binder, Term body) {
  return make(TermKind::kLam, {std::move(binder), ""}, {std::move(body)});
}
Term Term::app(Term fn, Term arg) {
  return make(TermKind::kApp, {}, {std::move(fn), std::move(arg)});
}
Term Term::roll(Term body) { return make(TermKind::kRoll, {}, {std::move(body)}); }
Term Term::unroll(Term body) {
  return make(TermKind::kUnroll, {}, {std::move(body)});
}
Term Term::slot() {
  static const Term t = make(TermKind::kSlot, {}, {});
  return t;
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->names[0]; }
const std::string& Term::name2() const { return node_->names[1]; }
const std::array<std::string, 2>& Term::names() const { return node_->names; }
std::size_t Term::arity() const { return node_->children.size(); }
const Term& Term::child(std::size_t i) const { return node_->children.at(i); }
const std::vector<Term>& Term::children() const { return node_->children; }
std::uint64_t Term::size() const { return node_->size; }

Term Term::with_children(std::vector<Term> children) const {
  bool same = children.size() == arity();
  for (std::size_t i = 0; same && i < children.size(); ++i) {
    same = children[i].same_node(child(i));
  }
  if (same) return *this;
  return make(kind(), names(), std::move(children));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.names() != b.names()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::vector<std::string> binders_over(const Term& t, std::size_t i) {
  switch (t.kind()) {
    case TermKind::kLam:
      return {t.name()};
    case TermKind::kMatchSum:
      if (i == 1) return {t.name()};
      if (i == 2) return {t.name2()};
      return {};
    case TermKind::kMatchPair:
      if (i == 1) return {t.name(), t.name2()};
      return {};
    default:
      return {};
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s == "_") return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '\'';
  });
}

bool is_value(const Term& t) {
  switch (t.kind()) {
    case TermKind::kUnit:
    case TermKind::kLam:
      return true;
    case TermKind::kInl:
    case TermKind::kInr:
    case TermKind::kRoll:
      return is_value(t.child(0));
    case TermKind::kPair:
      return is_value(t.first()) && is_value(t.second());
    default:
      return false;
  }
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, NameSet& out) {
  if (t.is(TermKind::kVar)) {
    if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
      out.insert(t.name());
    }
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto names = binders_over(t, i);
    for (auto& n : names) bound.push_back(n);
    collect_free(t.child(i), bound, out);
    bound.resize(bound.size() - names.size());
  }
}

bool free_occurrence(const std::string& x, const Term& t) {
  if (t.is(TermKind::kVar)) return t.name() == x;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto names = binders_over(t, i);
    if (std::find(names.begin(), names.end(), x) != names.end()) continue;
    if (free_occurrence(x, t.child(i))) return true;
  }
  return false;
}

using Env = std::vector<std::pair<std::string, std::size_t>>;

const std::size_t* lookup(const Env& env, const std::string& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == x) return &it->second;
  }
  return nullptr;
}

bool alpha_rec(const Term& a, const Term& b, Env& ea, Env& eb,
               std::size_t depth) {
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is(TermKind::kVar)) {
    const std::size_t* la = lookup(ea, a.name());
    const std::size_t* lb = lookup(eb, b.name());
    if (la == nullptr || lb == nullptr) {
      return la == nullptr && lb == nullptr && a.name() == b.name();
    }
    return *la == *lb;
  }
  if (ea.empty() && eb.empty() && a.same_node(b)) return true;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto na = binders_over(a, i);
    auto nb = binders_over(b, i);
    for (std::size_t k = 0; k < na.size(); ++k) {
      ea.emplace_back(na[k], depth + k);
      eb.emplace_back(nb[k], depth + k);
    }
    bool ok = alpha_rec(a.child(i), b.child(i), ea, eb, depth + na.size());
    ea.resize(ea.size() - na.size());
    eb.resize(eb.size() - nb.size());
    if (!ok) return false;
  }
  return true;
}

}  // namespace

NameSet free_vars(const Term& t) {
  NameSet out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool is_free_in(const std::string& x, const Term& t) {
  return free_occurrence(x, t);
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

bool alpha_eq(const Term& a, const Term& b) {
  Env ea, eb;
  return alpha_rec(a, b, ea, eb, 0);
}

std::size_t count_slots(const Term& t) {
  if (t.is(TermKind::kSlot)) return 1;
  std::size_t n = 0;
  for (const Term& c : t.children()) n += count_slots(c);
  return n;
}

Context::Context(Term t) : term_(std::move(t)) {
  const std::size_t n = count_slots(term_);
  if (n == 0) throw InvalidContext("context has no hole");
  if (n > 1) throw InvalidContext("context has multiple holes");
}

bool Context::is_frame() const {
  if (is_empty()) return false;
  return term_.child(slot_child()).is(TermKind::kSlot);
}

std::size_t Context::slot_child() const {
  for (std::size_t i = 0; i < term_.arity(); ++i) {
    if (count_slots(term_.child(i)) > 0) return i;
  }
  throw InvalidContext("empty context has no outer frame");
}

std::pair<Context, Context> Context::split_outer() const {
  const std::size_t i = slot_child();
  std::vector<Term> kids = term_.children();
  Term inner = kids[i];
  kids[i] = Term::slot();
  return {Context(term_.with_children(std::move(kids))), Context(inner)};
}

namespace {

Term plug_term(const Term& t, const Term& e) {
  if (t.is(TermKind::kSlot)) return e;
  std::vector<Term> kids = t.children();
  for (Term& k : kids) {
    if (count_slots(k) > 0) {
      k = plug_term(k, e);
      break;
    }
  }
  return t.with_children(std::move(kids));
}

}  // namespace

Term plug(const Context& c, const Term& e) { return plug_term(c.term(), e); }

Context plug(const Context& outer, const Context& inner) {
  return Context(plug_term(outer.term(), inner.term()));
}

bool alpha_eq(const Context& a, const Context& b) {
  return alpha_eq(a.term(), b.term());
}

std::string fresh_name(std::string_view base, const NameSet& avoid) {
  std::string stem(base.substr(0, base.find('!')));
  if (stem.empty()) stem = "v";
  for (;;) {
    std::string candidate = stem + "!" + std::to_string(++fresh_counter);
    if (avoid.count(candidate) == 0) return candidate;
  }
}

FreshNameScope::FreshNameScope() : saved_(fresh_counter) { fresh_counter = 0; }
FreshNameScope::~FreshNameScope() { fresh_counter = saved_; }

}  // namespace ilc
