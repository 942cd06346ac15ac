#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "ilc/harness.hpp"

namespace ilc {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// ---------------------------------------------------------------------------
// Types. Only the generators use them: nothing in the calculus is typed.
// Nat is the one recursive type, nat = roll (1 + nat).

struct Type;
using TypeRef = std::shared_ptr<Type>;

struct Type {
  enum Kind { kVar, kUnit, kSum, kProd, kArrow, kNat } kind;
  TypeRef a, b;
  TypeRef link;  // kVar only, once solved
};

TypeRef mk(Type::Kind k, TypeRef a = nullptr, TypeRef b = nullptr) {
  return std::make_shared<Type>(Type{k, std::move(a), std::move(b), nullptr});
}
TypeRef fresh_type() { return mk(Type::kVar); }
TypeRef unit_type() { return mk(Type::kUnit); }
TypeRef nat_type() { return mk(Type::kNat); }
TypeRef nat_body() { return mk(Type::kSum, unit_type(), nat_type()); }

TypeRef resolve(TypeRef t) {
  while (t->kind == Type::kVar && t->link) t = t->link;
  return t;
}

bool occurs(const TypeRef& v, TypeRef t) {
  t = resolve(t);
  if (t == v) return true;
  if (t->a && occurs(v, t->a)) return true;
  return t->b && occurs(v, t->b);
}

bool unify(TypeRef x, TypeRef y) {
  x = resolve(x);
  y = resolve(y);
  if (x == y) return true;
  if (x->kind == Type::kVar) {
    if (occurs(x, y)) return false;
    x->link = y;
    return true;
  }
  if (y->kind == Type::kVar) return unify(y, x);
  if (x->kind != y->kind) return false;
  if (x->a && !unify(x->a, y->a)) return false;
  if (x->b && !unify(x->b, y->b)) return false;
  return true;
}

// Unsolved variables read as unit.
bool type_eq(TypeRef x, TypeRef y) {
  x = resolve(x);
  y = resolve(y);
  if (x == y) return true;
  auto k = [](const TypeRef& t) {
    return t->kind == Type::kVar ? Type::kUnit : t->kind;
  };
  if (k(x) != k(y)) return false;
  if (x->a && !type_eq(x->a, y->a)) return false;
  if (x->b && !type_eq(x->b, y->b)) return false;
  return true;
}

using Env = std::vector<std::pair<std::string, TypeRef>>;

TypeRef lookup(const Env& env, const std::string& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == x) return it->second;
  }
  return nullptr;
}

Env extended(Env env, const std::string& x, TypeRef t) {
  env.emplace_back(x, std::move(t));
  return env;
}

struct TypeClash {};

TypeRef infer_rec(const Term& t, Env& env) {
  auto need = [](bool ok) {
    if (!ok) throw TypeClash{};
  };
  switch (t.kind()) {
    case TermKind::kVar: {
      TypeRef r = lookup(env, t.name());
      need(r != nullptr);
      return r;
    }
    case TermKind::kUnit: return unit_type();
    case TermKind::kHole: return fresh_type();
    case TermKind::kSlot: return fresh_type();
    case TermKind::kInl: return mk(Type::kSum, infer_rec(t.child(0), env), fresh_type());
    case TermKind::kInr: return mk(Type::kSum, fresh_type(), infer_rec(t.child(0), env));
    case TermKind::kPair: {
      TypeRef a = infer_rec(t.first(), env);
      return mk(Type::kProd, a, infer_rec(t.second(), env));
    }
    case TermKind::kLam: {
      TypeRef a = fresh_type();
      env.emplace_back(t.binder(), a);
      TypeRef b = infer_rec(t.body(), env);
      env.pop_back();
      return mk(Type::kArrow, a, b);
    }
    case TermKind::kApp: {
      TypeRef f = infer_rec(t.fn(), env);
      TypeRef a = infer_rec(t.arg(), env);
      TypeRef r = fresh_type();
      need(unify(f, mk(Type::kArrow, a, r)));
      return r;
    }
    case TermKind::kMatchSum: {
      TypeRef s = infer_rec(t.scrutinee(), env);
      TypeRef a = fresh_type(), b = fresh_type();
      need(unify(s, mk(Type::kSum, a, b)));
      env.emplace_back(t.name(), a);
      TypeRef l = infer_rec(t.left(), env);
      env.back() = {t.name2(), b};
      TypeRef r = infer_rec(t.right(), env);
      env.pop_back();
      need(unify(l, r));
      return l;
    }
    case TermKind::kMatchPair: {
      TypeRef s = infer_rec(t.scrutinee(), env);
      TypeRef a = fresh_type(), b = fresh_type();
      need(unify(s, mk(Type::kProd, a, b)));
      env.emplace_back(t.name(), a);
      env.emplace_back(t.name2(), b);
      TypeRef r = infer_rec(t.body(), env);
      env.pop_back();
      env.pop_back();
      return r;
    }
    case TermKind::kRoll:
      need(unify(infer_rec(t.child(0), env), nat_body()));
      return nat_type();
    case TermKind::kUnroll:
      need(unify(infer_rec(t.child(0), env), nat_type()));
      return nat_body();
  }
  throw TypeClash{};
}

// nullptr when `t` has no type.
TypeRef infer(const Term& t, const Env& env) {
  Env scratch = env;
  try {
    return infer_rec(t, scratch);
  } catch (const TypeClash&) {
    return nullptr;
  }
}

int min_size(TypeRef t) {
  t = resolve(t);
  switch (t->kind) {
    case Type::kVar:
    case Type::kUnit: return 1;
    case Type::kSum: return 1 + std::min(min_size(t->a), min_size(t->b));
    case Type::kProd: return 1 + min_size(t->a) + min_size(t->b);
    case Type::kArrow: return 1 + min_size(t->b);
    case Type::kNat: return 3;
  }
  return 1;
}

const std::vector<std::string> kNames = {"x", "y", "z", "f", "g", "a",
                                         "b", "k", "n", "p", "u", "w"};

// ---------------------------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive; lo when hi < lo
    if (hi <= lo) return lo;
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  const std::string& name() { return kNames[uniform(0, kNames.size() - 1)]; }

  // Index drawn with the given weights; -1 if all are zero.
  int pick(const std::vector<int>& weights) {
    int total = 0;
    for (int w : weights) total += std::max(w, 0);
    if (total == 0) return -1;
    int r = uniform(0, total - 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0) continue;
      if (r < weights[i]) return static_cast<int>(i);
      r -= weights[i];
    }
    return -1;
  }

  TypeRef rand_type(int depth) {
    std::vector<int> w = {4, depth > 0 ? 3 : 0, depth > 0 ? 2 : 0,
                          depth > 0 ? 2 : 0, 1};
    switch (pick(w)) {
      case 1: return mk(Type::kSum, rand_type(depth - 1), rand_type(depth - 1));
      case 2: return mk(Type::kProd, rand_type(depth - 1), rand_type(depth - 1));
      case 3: return mk(Type::kArrow, rand_type(depth - 1), rand_type(depth - 1));
      case 4: return nat_type();
      default: return unit_type();
    }
  }

  // Splits `total` into parts no smaller than `mins`, at random.
  std::vector<int> split(int total, const std::vector<int>& mins) {
    std::vector<int> out = mins;
    int spare = total;
    for (int m : mins) spare -= m;
    for (int i = 0; i < spare; ++i) {
      if (chance(0.15)) continue;  // leave some budget unused
      ++out[uniform(0, out.size() - 1)];
    }
    return out;
  }

  // A term of type `t` in `env`, of at most max(budget, min_size(t)) nodes.
  Term term(TypeRef t, const Env& env, int budget) {
    t = resolve(t);
    if (t->kind == Type::kVar) t = unit_type();
    const int m = min_size(t);
    budget = std::max(budget, m);

    std::vector<std::string> same, fns, sums, prods;
    std::vector<TypeRef> fn_args;
    NameSet seen;
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (!seen.insert(it->first).second) continue;
      TypeRef ty = resolve(it->second);
      if (type_eq(ty, t)) same.push_back(it->first);
      if (ty->kind == Type::kArrow && type_eq(ty->b, t) &&
          budget >= 2 + min_size(ty->a)) {
        fns.push_back(it->first);
        fn_args.push_back(ty->a);
      }
      if (ty->kind == Type::kSum && budget >= 2 + 2 * m) sums.push_back(it->first);
      if (ty->kind == Type::kProd && budget >= 2 + m) prods.push_back(it->first);
    }
    const bool roomy = budget >= 6;
    enum { kVarOpt, kIntro, kBeta, kMatch, kAppVar, kCaseVar, kSplitVar,
           kNatRec, kProj, kIdApp, kUnrollRoll };
    std::vector<int> w(11, 0);
    w[kVarOpt] = same.empty() ? 0 : (roomy ? 2 : 6);
    w[kIntro] = 3;
    w[kBeta] = budget >= 4 + m ? 4 : 0;
    w[kMatch] = budget >= 3 + 2 * m ? 3 : 0;
    w[kAppVar] = fns.empty() ? 0 : 3;
    w[kCaseVar] = sums.empty() ? 0 : 2;
    w[kSplitVar] = prods.empty() ? 0 : 1;
    w[kNatRec] = budget >= 6 + 2 * m ? 1 : 0;
    w[kProj] = budget >= 7 + m ? 1 : 0;
    w[kIdApp] = budget >= 3 + m ? 1 : 0;
    w[kUnrollRoll] =
        type_eq(t, nat_body()) && budget >= 2 + m ? 2 : 0;

    switch (pick(w)) {
      case kVarOpt:
        return Term::var(same[uniform(0, same.size() - 1)]);
      case kBeta: {
        TypeRef a = rand_type(1);
        if (budget < 2 + min_size(a) + m) a = unit_type();
        const std::string& x = name();
        auto parts = split(budget - 2, {min_size(a), m});
        Term body = term(t, extended(env, x, a), parts[1]);
        return Term::app(Term::lam(x, body), term(a, env, parts[0]));
      }
      case kMatch: {
        TypeRef a = rand_type(1), b = rand_type(1);
        TypeRef s = mk(Type::kSum, a, b);
        if (budget < 1 + min_size(s) + 2 * m) s = mk(Type::kSum, unit_type(), unit_type());
        auto parts = split(budget - 1, {min_size(s), m, m});
        const std::string& xl = name();
        const std::string& xr = name();
        s = resolve(s);
        return Term::match_sum(term(s, env, parts[0]), xl,
                               term(t, extended(env, xl, s->a), parts[1]), xr,
                               term(t, extended(env, xr, s->b), parts[2]));
      }
      case kAppVar: {
        const int i = uniform(0, fns.size() - 1);
        return Term::app(Term::var(fns[i]), term(fn_args[i], env, budget - 2));
      }
      case kCaseVar: {
        const std::string& s = sums[uniform(0, sums.size() - 1)];
        TypeRef st = resolve(lookup(env, s));
        auto parts = split(budget - 2, {m, m});
        const std::string& xl = name();
        const std::string& xr = name();
        return Term::match_sum(Term::var(s), xl,
                               term(t, extended(env, xl, st->a), parts[0]), xr,
                               term(t, extended(env, xr, st->b), parts[1]));
      }
      case kSplitVar: {
        const std::string& p = prods[uniform(0, prods.size() - 1)];
        TypeRef pt = resolve(lookup(env, p));
        std::string x1 = name(), x2 = name();
        if (x1 == x2) x2 = x1 + "2";
        Env inner = extended(extended(env, x1, pt->a), x2, pt->b);
        return Term::match_pair(Term::var(p), x1, x2, term(t, inner, budget - 2));
      }
      case kNatRec: {
        auto parts = split(budget - 2, {3, m, m});
        const std::string& u = name();
        const std::string& r = name();
        return Term::match_sum(
            Term::unroll(term(nat_type(), env, parts[0])), u,
            term(t, extended(env, u, unit_type()), parts[1]), r,
            term(t, extended(env, r, nat_type()), parts[2]));
      }
      case kProj: {
        TypeRef other = rand_type(1);
        if (budget < 6 + m + min_size(other)) other = unit_type();
        auto parts = split(budget - 6, {m, min_size(other)});
        const bool take_first = chance(0.5);
        Term a = term(take_first ? t : other, env, take_first ? parts[0] : parts[1]);
        Term b = term(take_first ? other : t, env, take_first ? parts[1] : parts[0]);
        return Term::app(projection(take_first), Term::pair(a, b));
      }
      case kIdApp: {
        const std::string& y = name();
        return Term::app(Term::lam(y, Term::var(y)), term(t, env, budget - 3));
      }
      case kUnrollRoll:
        return Term::unroll(Term::roll(term(t, env, budget - 2)));
      default:
        return intro(t, env, budget);
    }
  }

  static Term projection(bool first) {
    return Term::lam("p", Term::match_pair(Term::var("p"), "u", "w",
                                           Term::var(first ? "u" : "w")));
  }

  Term intro(TypeRef t, const Env& env, int budget) {
    t = resolve(t);
    switch (t->kind) {
      case Type::kSum: {
        bool left = chance(0.5);
        if (budget - 1 < min_size(left ? t->a : t->b)) left = !left;
        Term body = term(left ? t->a : t->b, env, budget - 1);
        return left ? Term::inl(body) : Term::inr(body);
      }
      case Type::kProd: {
        auto parts = split(budget - 1, {min_size(t->a), min_size(t->b)});
        Term a = term(t->a, env, parts[0]);
        return Term::pair(a, term(t->b, env, parts[1]));
      }
      case Type::kArrow: {
        const std::string& x = name();
        return Term::lam(x, term(t->b, extended(env, x, t->a), budget - 1));
      }
      case Type::kNat:
        if (budget >= 6 && chance(0.6)) {
          return Term::roll(Term::inr(term(nat_type(), env, budget - 2)));
        }
        return Term::roll(Term::inl(Term::unit()));
      default:
        return Term::unit();
    }
  }

  // A value of type `t`; lambdas may have arbitrary bodies.
  Term value(TypeRef t, const Env& env, int budget) {
    t = resolve(t);
    budget = std::max(budget, min_size(t));
    switch (t->kind) {
      case Type::kSum: {
        bool left = chance(0.5);
        if (budget - 1 < min_size(left ? t->a : t->b)) left = !left;
        Term body = value(left ? t->a : t->b, env, budget - 1);
        return left ? Term::inl(body) : Term::inr(body);
      }
      case Type::kProd: {
        auto parts = split(budget - 1, {min_size(t->a), min_size(t->b)});
        Term a = value(t->a, env, parts[0]);
        return Term::pair(a, value(t->b, env, parts[1]));
      }
      case Type::kNat:
        if (budget >= 6 && chance(0.5)) {
          return Term::roll(Term::inr(value(nat_type(), env, budget - 2)));
        }
        return Term::roll(Term::inl(Term::unit()));
      case Type::kArrow:
        return intro(t, env, budget);
      default:
        return Term::unit();
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Delta generation. `senv`/`tenv` bind the variables in scope in the source
// and the target; they differ under inserted or deleted binders. A position
// is "free" when nothing consumes its value, so its type may change.

class DeltaGen {
 public:
  explicit DeltaGen(Gen& g) : g_(g) {}

  Delta walk(const Term& e, TypeRef t, const Env& senv, const Env& tenv,
             int budget, bool free) {
    if (!t) t = fresh_type();
    if (budget <= 0) return repair(e, t, senv, tenv);

    const auto cong = congruence_of(e.kind());
    const bool has_cong = cong.has_value() && e.arity() > 0;
    const bool injection = e.is(TermKind::kInl) || e.is(TermKind::kInr);
    std::vector<std::string> renames;
    if (e.is(TermKind::kVar)) renames = same_typed(tenv, t);

    enum { kEpsOpt, kCong, kReplace, kVarRep, kBang, kIns, kDel };
    std::vector<int> w(7, 0);
    w[kEpsOpt] = eps_ok(e, senv, tenv) ? 2 : 0;
    w[kCong] = has_cong ? 6 : 0;
    w[kReplace] = 1;
    w[kVarRep] = renames.empty() ? 0 : 4;
    w[kBang] = injection ? 3 : 0;
    w[kIns] = budget >= 2 ? 2 : 0;
    w[kDel] = budget >= 2 && deletable(e, t, senv, free) ? 3 : 0;

    switch (g_.pick(w)) {
      case kEpsOpt:
        return Delta::eps(e);
      case kCong:
        return congruence(e, t, senv, tenv, budget, free);
      case kVarRep:
        return Delta::var_replace(e.name(),
                                  renames[g_.uniform(0, renames.size() - 1)]);
      case kBang:
        return bang(e, t, senv, tenv, budget, free);
      case kIns:
        return insert(e, t, senv, tenv, budget, free);
      case kDel:
        if (auto d = remove(e, t, senv, tenv, budget, free)) return *d;
        return repair(e, t, senv, tenv);
      default:
        return replace(e, t, tenv, budget, free);
    }
  }

  // Smallest valid delta from `e`, without spending budget.
  Delta repair(const Term& e, TypeRef t, const Env& senv, const Env& tenv) {
    if (eps_ok(e, senv, tenv)) return Delta::eps(e);
    if (e.is(TermKind::kVar)) {
      auto names = same_typed(tenv, t);
      if (!names.empty()) {
        return Delta::var_replace(e.name(),
                                  names[g_.uniform(0, names.size() - 1)]);
      }
      return Delta::replace(e, g_.term(t, tenv, 3));
    }
    if (congruence_of(e.kind()) && e.arity() > 0) {
      return congruence(e, t, senv, tenv, 0, false);
    }
    return Delta::replace(e, g_.term(t, tenv, 3));
  }

 private:
  struct ChildInfo {
    TypeRef type;
    std::vector<std::pair<std::string, TypeRef>> binders;
    bool free;
  };

  std::vector<ChildInfo> children_of(const Term& e, TypeRef t,
                                     const Env& senv, bool free) {
    std::vector<ChildInfo> out;
    switch (e.kind()) {
      case TermKind::kInl:
      case TermKind::kInr: {
        TypeRef a = fresh_type(), b = fresh_type();
        unify(t, mk(Type::kSum, a, b));
        out.push_back({e.is(TermKind::kInl) ? a : b, {}, free});
        break;
      }
      case TermKind::kRoll:
        out.push_back({nat_body(), {}, free});
        break;
      case TermKind::kUnroll:
        out.push_back({nat_type(), {}, false});
        break;
      case TermKind::kPair: {
        TypeRef a = fresh_type(), b = fresh_type();
        unify(t, mk(Type::kProd, a, b));
        out.push_back({a, {}, free});
        out.push_back({b, {}, free});
        break;
      }
      case TermKind::kLam: {
        TypeRef a = fresh_type(), b = fresh_type();
        unify(t, mk(Type::kArrow, a, b));
        out.push_back({b, {{e.binder(), a}}, false});
        break;
      }
      case TermKind::kApp: {
        TypeRef a = infer(e.arg(), senv);
        if (!a) a = fresh_type();
        out.push_back({mk(Type::kArrow, a, t), {}, false});
        out.push_back({a, {}, false});
        break;
      }
      case TermKind::kMatchSum: {
        TypeRef s = infer(e.scrutinee(), senv);
        if (!s) s = fresh_type();
        TypeRef a = fresh_type(), b = fresh_type();
        unify(s, mk(Type::kSum, a, b));
        out.push_back({s, {}, false});
        out.push_back({t, {{e.name(), a}}, free});
        out.push_back({t, {{e.name2(), b}}, free});
        break;
      }
      case TermKind::kMatchPair: {
        TypeRef s = infer(e.scrutinee(), senv);
        if (!s) s = fresh_type();
        TypeRef a = fresh_type(), b = fresh_type();
        unify(s, mk(Type::kProd, a, b));
        out.push_back({s, {}, false});
        out.push_back({t, {{e.name(), a}, {e.name2(), b}}, free});
        break;
      }
      default:
        break;
    }
    return out;
  }

  static Env with(Env env, const std::vector<std::pair<std::string, TypeRef>>& bs) {
    for (const auto& b : bs) env.push_back(b);
    return env;
  }

  static bool eps_ok(const Term& e, const Env& senv, const Env& tenv) {
    for (const std::string& x : free_vars(e)) {
      TypeRef tt = lookup(tenv, x);
      if (!tt) return false;
      TypeRef st = lookup(senv, x);
      if (st && !type_eq(st, tt)) return false;
    }
    return true;
  }

  static std::vector<std::string> same_typed(const Env& env, TypeRef t) {
    std::vector<std::string> out;
    NameSet seen;
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (!seen.insert(it->first).second) continue;
      if (type_eq(it->second, t)) out.push_back(it->first);
    }
    return out;
  }

  Delta congruence(const Term& e, TypeRef t, const Env& senv, const Env& tenv,
                   int budget, bool free) {
    auto info = children_of(e, t, senv, free);
    std::vector<int> mins(e.arity(), 0);
    auto parts = g_.split(std::max(budget - 1, 0), mins);
    std::vector<Delta> kids;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      const Term& c = e.child(i);
      Env s = with(senv, info[i].binders), tt = with(tenv, info[i].binders);
      if (i == 0 && e.is(TermKind::kMatchSum) && parts[0] >= 2 &&
          (c.is(TermKind::kInl) || c.is(TermKind::kInr)) && g_.chance(0.2)) {
        // Re-tag an already tagged scrutinee: inl v ~> inl (inl v').
        Delta under = walk(c.child(0), fresh_type(), s, tt, parts[0] - 2, false);
        Delta same = c.is(TermKind::kInl) ? Delta::inl(under) : Delta::inr(under);
        Term slot = c.is(TermKind::kInl) ? Term::inl(Term::slot())
                                         : Term::inr(Term::slot());
        kids.push_back(Delta::ins(Context(slot), same));
        continue;
      }
      kids.push_back(walk(c, info[i].type, s, tt, parts[i], info[i].free));
    }
    return Delta::congruence(e, std::move(kids));
  }

  Delta bang(const Term& e, TypeRef t, const Env& senv, const Env& tenv,
             int budget, bool free) {
    TypeRef a = fresh_type(), b = fresh_type();
    unify(t, mk(Type::kSum, a, b));
    const bool was_inl = e.is(TermKind::kInl);
    TypeRef from = was_inl ? a : b, to = was_inl ? b : a;
    Delta inner = free || type_eq(from, to)
                      ? walk(e.child(0), from, senv, tenv, budget - 1, free)
                      : Delta::replace(e.child(0),
                                       g_.term(to, tenv, g_.uniform(1, budget)));
    return was_inl ? Delta::inr_bang(inner) : Delta::inl_bang(inner);
  }

  Delta replace(const Term& e, TypeRef t, const Env& tenv, int budget,
                bool free) {
    TypeRef to = free && g_.chance(0.3) ? g_.rand_type(1) : t;
    return Delta::replace(e, g_.term(to, tenv, g_.uniform(1, std::min(budget, 8))));
  }

  static Delta ins(const Term& frame, Delta inner) {
    return Delta::ins(Context(frame), std::move(inner));
  }
  static Delta del(const Term& frame, Delta inner) {
    return Delta::del(Context(frame), std::move(inner));
  }

  // Merges Ins(F, Ins(G, d)) into Ins(F[G], d) now and then.
  Delta maybe_deepen(Delta d) {
    if ((d.is(DeltaKind::kIns) || d.is(DeltaKind::kDel)) &&
        d.inner().kind() == d.kind() && g_.chance(0.25)) {
      Context merged = plug(d.frame(), d.inner().frame());
      return d.is(DeltaKind::kIns) ? Delta::ins(merged, d.inner().inner())
                                   : Delta::del(merged, d.inner().inner());
    }
    return d;
  }

  Delta insert(const Term& e, TypeRef t, const Env& senv, const Env& tenv,
               int budget, bool free) {
    enum { kAppLeft, kAppRight, kUnroll, kMatch, kPairProj, kWrap, kPairFree,
           kLamFree };
    std::vector<int> w = {3, 3, 2, 3, 2, free ? 4 : 0, free ? 2 : 0,
                          free ? 1 : 0};
    const int rest = std::max(budget - 2, 0);
    switch (g_.pick(w)) {
      case kAppLeft: {
        const int k = g_.uniform(2, std::max(2, rest / 2));
        const std::string& y = g_.name();
        Term fn = Term::lam(y, g_.term(t, extended(tenv, y, t), k - 1));
        return ins(Term::app(fn, Term::slot()),
                   walk(e, t, senv, tenv, budget - 1 - k, false));
      }
      case kAppRight: {
        TypeRef a = g_.rand_type(1);
        const int k = g_.uniform(1, std::max(1, rest / 3));
        Term arg = g_.term(a, tenv, k);
        const std::string& y = g_.name();
        Delta body = walk(e, t, senv, extended(tenv, y, a),
                          budget - 2 - static_cast<int>(arg.size()), false);
        return maybe_deepen(ins(Term::app(Term::slot(), arg),
                                ins(Term::lam(y, Term::slot()), body)));
      }
      case kUnroll:
        return maybe_deepen(
            ins(Term::unroll(Term::slot()),
                ins(Term::roll(Term::slot()),
                    walk(e, t, senv, tenv, budget - 3, false))));
      case kMatch: {
        const bool left = g_.chance(0.5);
        TypeRef other = g_.rand_type(1);
        const std::string& xl = g_.name();
        const std::string& xr = g_.name();
        const int k = std::max(1, rest / 3);
        Term l = left && g_.chance(0.5)
                     ? Term::var(xl)
                     : g_.term(t, extended(tenv, xl, left ? t : other), g_.uniform(1, k));
        Term r = !left && g_.chance(0.5)
                     ? Term::var(xr)
                     : g_.term(t, extended(tenv, xr, left ? other : t), g_.uniform(1, k));
        Term frame = Term::match_sum(Term::slot(), xl, l, xr, r);
        Term tag = left ? Term::inl(Term::slot()) : Term::inr(Term::slot());
        Delta inner = walk(e, t, senv, tenv,
                           budget - 2 - static_cast<int>(l.size() + r.size()), false);
        return maybe_deepen(ins(frame, ins(tag, inner)));
      }
      case kPairProj: {
        const bool first = g_.chance(0.5);
        TypeRef other = g_.rand_type(1);
        Term sib = g_.term(other, tenv, g_.uniform(1, std::max(1, rest / 3)));
        Term pair = first ? Term::pair(Term::slot(), sib) : Term::pair(sib, Term::slot());
        Delta inner = walk(e, t, senv, tenv,
                           budget - 8 - static_cast<int>(sib.size()), false);
        return ins(Term::app(Gen::projection(first), Term::slot()), ins(pair, inner));
      }
      case kWrap: {
        const int which = g_.uniform(0, 2);
        Term frame = which == 0   ? Term::inl(Term::slot())
                     : which == 1 ? Term::inr(Term::slot())
                                  : Term::roll(Term::slot());
        return maybe_deepen(ins(frame, walk(e, fresh_type(), senv, tenv, budget - 2, true)));
      }
      case kPairFree: {
        Term sib = g_.term(g_.rand_type(1), tenv, g_.uniform(1, std::max(1, rest / 3)));
        Term frame = g_.chance(0.5) ? Term::pair(Term::slot(), sib)
                                    : Term::pair(sib, Term::slot());
        return maybe_deepen(ins(frame, walk(e, fresh_type(), senv, tenv,
                                            budget - 2 - static_cast<int>(sib.size()), true)));
      }
      default: {
        const std::string& y = g_.name();
        Delta body = walk(e, t, senv, extended(tenv, y, g_.rand_type(1)), budget - 2, false);
        return ins(Term::lam(y, Term::slot()), body);
      }
    }
  }

  static bool is_projection(const Term& f) {
    return f.is(TermKind::kLam) && f.body().is(TermKind::kMatchPair) &&
           f.body().scrutinee().is(TermKind::kVar) &&
           f.body().scrutinee().name() == f.binder() &&
           f.body().body().is(TermKind::kVar);
  }

  bool deletable(const Term& e, TypeRef t, const Env& senv, bool free) {
    switch (e.kind()) {
      case TermKind::kApp:
      case TermKind::kMatchSum:
      case TermKind::kUnroll:
        return true;
      case TermKind::kInl:
      case TermKind::kInr:
      case TermKind::kRoll:
      case TermKind::kPair:
      case TermKind::kLam:
        return free;
      default:
        (void)t;
        (void)senv;
        return false;
    }
  }

  std::optional<Delta> remove(const Term& e, TypeRef t, const Env& senv,
                              const Env& tenv, int budget, bool free) {
    const int rest = budget - 2;
    switch (e.kind()) {
      case TermKind::kApp: {
        const Term& f = e.fn();
        const Term& a = e.arg();
        TypeRef at = infer(a, senv);
        if (is_projection(f) && a.is(TermKind::kPair)) {
          // (fun p -> match p {(u, w) -> u}) (a, b)  ~>  a
          const bool first = f.body().body().name() == f.body().name();
          const std::size_t keep = first ? 0 : 1;
          Term frame = first ? Term::pair(Term::slot(), a.second())
                             : Term::pair(a.first(), Term::slot());
          return del(Term::app(f, Term::slot()),
                     del(frame, walk(a.child(keep), t, senv, tenv, rest - 1, free)));
        }
        if (at && type_eq(at, t) && g_.chance(0.5)) {
          return del(Term::app(f, Term::slot()), walk(a, t, senv, tenv, rest, free));
        }
        if (f.is(TermKind::kLam)) {
          Delta body = walk(f.body(), t, extended(senv, f.binder(), at ? at : fresh_type()),
                            tenv, rest - 1, free);
          return maybe_deepen(del(Term::app(Term::slot(), a),
                                  del(Term::lam(f.binder(), Term::slot()), body)));
        }
        return del(Term::app(Term::slot(), a),
                   Delta::replace(f, g_.term(t, tenv, g_.uniform(1, 6))));
      }
      case TermKind::kMatchSum: {
        const Term& s = e.scrutinee();
        Term frame = Term::match_sum(Term::slot(), e.name(), e.left(), e.name2(),
                                     e.right());
        TypeRef st = infer(s, senv);
        if ((s.is(TermKind::kInl) || s.is(TermKind::kInr)) && st) {
          TypeRef a = fresh_type(), b = fresh_type();
          unify(st, mk(Type::kSum, a, b));
          TypeRef payload = s.is(TermKind::kInl) ? a : b;
          if (type_eq(payload, t)) {
            Term tag = s.is(TermKind::kInl) ? Term::inl(Term::slot())
                                            : Term::inr(Term::slot());
            return maybe_deepen(
                del(frame, del(tag, walk(s.child(0), t, senv, tenv, rest - 1, free))));
          }
        }
        return del(frame, Delta::replace(s, g_.term(t, tenv, g_.uniform(1, 6))));
      }
      case TermKind::kUnroll: {
        const Term& r = e.child(0);
        if (r.is(TermKind::kRoll)) {
          return maybe_deepen(del(Term::unroll(Term::slot()),
                                  del(Term::roll(Term::slot()),
                                      walk(r.child(0), t, senv, tenv, rest - 1, free))));
        }
        return del(Term::unroll(Term::slot()),
                   Delta::replace(r, g_.term(t, tenv, g_.uniform(1, 6))));
      }
      case TermKind::kInl:
      case TermKind::kInr:
      case TermKind::kRoll: {
        Term frame = e.with_children({Term::slot()});
        return maybe_deepen(
            del(frame, walk(e.child(0), fresh_type(), senv, tenv, rest, true)));
      }
      case TermKind::kPair: {
        const bool keep_first = g_.chance(0.5);
        Term frame = keep_first ? Term::pair(Term::slot(), e.second())
                                : Term::pair(e.first(), Term::slot());
        return maybe_deepen(del(frame, walk(e.child(keep_first ? 0 : 1), fresh_type(),
                                            senv, tenv, rest, true)));
      }
      case TermKind::kLam: {
        TypeRef a = fresh_type(), b = fresh_type();
        unify(t, mk(Type::kArrow, a, b));
        return del(Term::lam(e.binder(), Term::slot()),
                   walk(e.body(), b, extended(senv, e.binder(), a), tenv, rest, free));
      }
      default:
        return std::nullopt;
    }
  }

  Gen& g_;
};

TypeRef root_type(const Term& e) {
  TypeRef t = infer(e, {});
  return t ? t : fresh_type();
}

}  // namespace

Term gen_term(std::uint64_t seed, std::uint64_t size_bound) {
  Gen g(seed);
  const int bound = static_cast<int>(std::min<std::uint64_t>(size_bound, 1 << 20));
  if (bound <= 1) return Term::unit();
  TypeRef t = g.rand_type(2);
  if (min_size(t) > bound) t = unit_type();
  return g.term(t, {}, bound);
}

Delta gen_delta(std::uint64_t seed, const Term& e, std::uint64_t size_bound) {
  if (size_bound == 0) return Delta::eps(e);
  Gen g(seed);
  DeltaGen dg(g);
  const int budget = static_cast<int>(std::min<std::uint64_t>(size_bound, 1 << 20));
  return dg.walk(e, root_type(e), {}, {}, budget, true);
}

SubstCase gen_subst_case(std::uint64_t seed, std::uint64_t size_bound) {
  Gen g(seed);
  DeltaGen dg(g);
  const int bound = static_cast<int>(std::max<std::uint64_t>(size_bound, 4));
  const std::string x = g.name();
  TypeRef a = g.rand_type(1);

  // The substituted value is sometimes open, so that binders in `d` can
  // capture its free variables.
  Env venv;
  if (g.chance(0.3)) venv.emplace_back(g.name(), a);
  Term v = g.value(a, venv, g.uniform(1, bound / 3));
  Delta dv = Delta::eps(v);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Delta cand = dg.walk(v, a, venv, venv, g.uniform(1, bound / 3), false);
    if (is_value(tgt(cand))) {
      dv = cand;
      break;
    }
  }

  Env env = venv;
  env.emplace_back(x, a);
  TypeRef t = g.rand_type(2);
  Term e = g.term(t, env, bound);
  Delta d = dg.walk(e, t, env, env, g.uniform(1, bound / 2), true);
  return {d, dv, x};
}

namespace {

// Pairs (a, b) from `e` with a compatible with b.
class PairGen {
 public:
  PairGen(Gen& g, DeltaGen& dg) : g_(g), dg_(dg) {}

  std::pair<Delta, Delta> walk(const Term& e, const Env& env, int budget) {
    TypeRef t = infer(e, env);
    if (!t) t = fresh_type();
    enum { kEpsAny, kInsAny, kDelDel, kCong };
    const bool framed = e.arity() > 0 && binder_free_frame(e);
    const bool cong = congruence_of(e.kind()).has_value() && e.arity() > 0;
    std::vector<int> w = {budget <= 0 ? 1 : 3, budget >= 2 ? 2 : 0,
                          framed && budget >= 2 ? 2 : 0, cong ? 5 : 0};
    switch (g_.pick(w)) {
      case kInsAny: {
        auto [a, b] = walk(e, env, budget - 2);
        return {Delta::ins(Context(wrapper()), a), b};
      }
      case kDelDel: {
        const std::size_t i = static_cast<std::size_t>(g_.uniform(0, e.arity() - 1));
        std::vector<Term> kids = e.children();
        kids[i] = Term::slot();
        Context frame(e.with_children(kids));
        auto [a, b] = walk(e.child(i), env, budget - 2);
        return {Delta::del(frame, a), Delta::del(frame, b)};
      }
      case kCong: {
        std::vector<Delta> as, bs;
        const int share = std::max(budget - 1, 0) / static_cast<int>(e.arity());
        for (std::size_t i = 0; i < e.arity(); ++i) {
          Env inner = env;
          for (const std::string& n : binders_over(e, i)) inner.emplace_back(n, fresh_type());
          auto [a, b] = walk(e.child(i), inner, share);
          as.push_back(a);
          bs.push_back(b);
        }
        return {Delta::congruence(e, std::move(as)), Delta::congruence(e, std::move(bs))};
      }
      default:
        return {Delta::eps(e), dg_.walk(e, t, env, env, std::max(budget, 0), false)};
    }
  }

 private:
  static bool binder_free_frame(const Term& e) {
    switch (e.kind()) {
      case TermKind::kInl:
      case TermKind::kInr:
      case TermKind::kRoll:
      case TermKind::kUnroll:
      case TermKind::kPair:
      case TermKind::kApp:
        return true;
      default:
        return false;
    }
  }

  Term wrapper() {
    switch (g_.uniform(0, 4)) {
      case 0: return Term::inl(Term::slot());
      case 1: return Term::inr(Term::slot());
      case 2: return Term::roll(Term::slot());
      case 3: return Term::pair(Term::slot(), Term::unit());
      default: return Term::app(Term::lam("y", Term::var("y")), Term::slot());
    }
  }

  Gen& g_;
  DeltaGen& dg_;
};

}  // namespace

std::pair<Delta, Delta> gen_compatible_pair(std::uint64_t seed,
                                            std::uint64_t size_bound) {
  Term e = gen_term(seed, size_bound);
  Gen g(mix_seed(seed, 1));
  DeltaGen dg(g);
  PairGen pg(g, dg);
  return pg.walk(e, {}, static_cast<int>(std::min<std::uint64_t>(size_bound, 1 << 20)) / 2);
}

}  // namespace ilc
