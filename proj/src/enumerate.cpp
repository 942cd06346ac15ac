#include <algorithm>
#include <map>
#include <utility>

#include "ilc/harness.hpp"

namespace ilc {

namespace {

using Scope = std::vector<std::string>;

std::string binder_for(const Scope& scope) {
  return "x" + std::to_string(scope.size());
}

Scope bind(Scope scope, const std::string& x) {
  scope.push_back(x);
  return scope;
}

// Terms of exactly `n` nodes whose free variables are in `scope`.
class TermEnumerator {
 public:
  const std::vector<Term>& exactly(std::size_t n, const Scope& scope) {
    auto key = std::make_pair(n, scope);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) {
      out.push_back(Term::unit());
      NameSet seen;
      for (const std::string& x : scope) {
        if (seen.insert(x).second) out.push_back(Term::var(x));
      }
    } else if (n >= 2) {
      for (const Term& t : exactly(n - 1, scope)) {
        out.push_back(Term::inl(t));
        out.push_back(Term::inr(t));
      }
      const std::string x = binder_for(scope);
      for (const Term& t : exactly(n - 1, bind(scope, x))) {
        out.push_back(Term::lam(x, t));
      }
      for (std::size_t k = 1; k + 1 < n; ++k) {
        const auto& as = exactly(k, scope);
        const auto& bs = exactly(n - 1 - k, scope);
        for (const Term& a : as) {
          for (const Term& b : bs) {
            out.push_back(Term::pair(a, b));
            out.push_back(Term::app(a, b));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<Term> up_to(std::size_t n, const Scope& scope) {
    std::vector<Term> out;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto& ts = exactly(k, scope);
      out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
  }

  // Contexts with exactly `n` non-slot nodes; `inner` receives the names
  // bound over the slot.
  std::vector<std::pair<Context, Scope>> contexts(std::size_t n,
                                                  const Scope& scope) {
    std::vector<std::pair<Context, Scope>> out;
    if (n == 0) {
      out.emplace_back(Context::empty(), Scope{});
      return out;
    }
    for (auto& [c, bs] : contexts(n - 1, scope)) {
      out.emplace_back(Context(Term::inl(c.term())), bs);
      out.emplace_back(Context(Term::inr(c.term())), bs);
    }
    const std::string x = binder_for(scope);
    for (auto& [c, bs] : contexts(n - 1, bind(scope, x))) {
      Scope with_x = bs;
      with_x.insert(with_x.begin(), x);
      out.emplace_back(Context(Term::lam(x, c.term())), with_x);
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      for (auto& [c, bs] : contexts(k, scope)) {
        for (const Term& t : exactly(n - 1 - k, scope)) {
          out.emplace_back(Context(Term::pair(c.term(), t)), bs);
          out.emplace_back(Context(Term::pair(t, c.term())), bs);
          out.emplace_back(Context(Term::app(c.term(), t)), bs);
          out.emplace_back(Context(Term::app(t, c.term())), bs);
        }
      }
    }
    return out;
  }

 private:
  std::map<std::pair<std::size_t, Scope>, std::vector<Term>> memo_;
};

class DeltaEnumerator {
 public:
  std::vector<Delta> run(const Term& e, const Scope& senv, const Scope& tenv,
                         std::size_t budget) {
    std::vector<Delta> out;
    if (budget == 0) return out;
    auto keep = [&](Delta d) {
      if (d.size() <= budget) out.push_back(std::move(d));
    };

    bool closed_in_target = true;
    for (const std::string& x : free_vars(e)) {
      closed_in_target &= std::find(tenv.begin(), tenv.end(), x) != tenv.end();
    }
    if (closed_in_target) keep(Delta::eps(e));

    if (e.is(TermKind::kVar)) {
      NameSet seen;
      for (const std::string& y : tenv) {
        if (seen.insert(y).second) keep(Delta::var_replace(e.name(), y));
      }
    }

    for (const Term& t : terms_.up_to(budget - 1, tenv)) keep(Delta::replace(e, t));

    // Congruences and flips.
    switch (e.kind()) {
      case TermKind::kInl:
      case TermKind::kInr:
        for (const Delta& d : run(e.child(0), senv, tenv, budget - 1)) {
          keep(e.is(TermKind::kInl) ? Delta::inl(d) : Delta::inr(d));
          keep(e.is(TermKind::kInl) ? Delta::inr_bang(d) : Delta::inl_bang(d));
        }
        break;
      case TermKind::kLam:
        for (const Delta& d : run(e.body(), bind(senv, e.binder()),
                                  bind(tenv, e.binder()), budget - 1)) {
          keep(Delta::lam(e.binder(), d));
        }
        break;
      case TermKind::kPair:
      case TermKind::kApp:
        for (const Delta& a : run(e.child(0), senv, tenv, budget - 1)) {
          if (a.size() + 1 >= budget) continue;
          for (const Delta& b :
               run(e.child(1), senv, tenv, budget - 1 - a.size())) {
            keep(Delta::congruence(e, {a, b}));
          }
        }
        break;
      default:
        break;
    }

    // Insertions, including the empty frame.
    for (std::size_t k = 0; k + 2 <= budget; ++k) {
      for (auto& [c, bound] : terms_.contexts(k, tenv)) {
        Scope inner_t = tenv;
        inner_t.insert(inner_t.end(), bound.begin(), bound.end());
        for (const Delta& d : run(e, senv, inner_t, budget - 1 - k)) {
          keep(Delta::ins(c, d));
        }
      }
    }

    // Deletions: every way of reading e as C[e'].
    deletions(e, Context::empty(), senv, tenv, budget, out);
    return out;
  }

 private:
  void deletions(const Term& sub, const Context& above, const Scope& senv,
                 const Scope& tenv, std::size_t budget,
                 std::vector<Delta>& out) {
    if (above.size() + 2 <= budget) {
      for (const Delta& d : run(sub, senv, tenv, budget - 1 - above.size())) {
        Delta del = Delta::del(above, d);
        if (del.size() <= budget) out.push_back(std::move(del));
      }
    }
    for (std::size_t i = 0; i < sub.arity(); ++i) {
      std::vector<Term> kids = sub.children();
      kids[i] = Term::slot();
      Context next = plug(above, Context(sub.with_children(kids)));
      if (next.size() + 2 > budget) continue;
      Scope inner = senv;
      for (const std::string& b : binders_over(sub, i)) inner.push_back(b);
      deletions(sub.child(i), next, inner, tenv, budget, out);
    }
  }

  TermEnumerator terms_;
};

}  // namespace

std::vector<Term> enumerate_closed_terms(std::size_t max_size) {
  TermEnumerator en;
  return en.up_to(max_size, {});
}

std::vector<Delta> enumerate_deltas(const Term& e, std::size_t max_size) {
  DeltaEnumerator en;
  return en.run(e, {}, {}, max_size);
}

}  // namespace ilc
