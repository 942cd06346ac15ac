#ifndef ILC_DELTA_HPP_
#define ILC_DELTA_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ilc/term.hpp"

namespace ilc {

enum class DeltaKind : std::uint8_t {
  kEps,         // identity change at a term
  kIns,         // target wrapped in a context
  kDel,         // source wrapped in a context
  kInl,         // congruences ...
  kInr,
  kInlBang,     // inr e ~> inl e'
  kInrBang,     // inl e ~> inr e'
  kMatch,
  kPair,
  kLam,
  kApp,
  kRoll,
  kUnroll,      // ... end of congruences
  kReplace,     // wholesale change a ~> b
  kVarReplace,  // x ~> y
};

std::string_view kind_name(DeltaKind kind);

// The congruence delta kind over a term constructor, if there is one.
std::optional<DeltaKind> congruence_of(TermKind kind);
// The term constructor a congruence delta kind maps over.
std::optional<TermKind> congruence_shape(DeltaKind kind);

// A change between two terms. Both endpoints are functions of the delta:
// see src() and tgt().
class Delta {
 public:
  static Delta eps(Term at);
  static Delta ins(Context frame, Delta inner);
  static Delta del(Context frame, Delta inner);
  static Delta inl(Delta inner);
  static Delta inr(Delta inner);
  static Delta inl_bang(Delta inner);
  static Delta inr_bang(Delta inner);
  static Delta match(Delta scrutinee, std::string xl, Delta left,
                     std::string xr, Delta right);
  static Delta pair(Delta first, Delta second);
  static Delta lam(std::string binder, Delta body);
  static Delta app(Delta fn, Delta arg);
  static Delta roll(Delta inner);
  static Delta unroll(Delta inner);
  static Delta replace(Term from, Term to);
  static Delta var_replace(std::string from, std::string to);

  // Congruence over the constructor of `shape` (its names are reused).
  static Delta congruence(const Term& shape, std::vector<Delta> children);

  DeltaKind kind() const;
  bool is(DeltaKind k) const { return kind() == k; }
  bool is_congruence() const { return congruence_shape(kind()).has_value(); }

  // Eps: at. Replace: from.
  const Term& term() const;
  // Replace: to.
  const Term& term2() const;
  // Ins/Del frame.
  const Context& frame() const;
  // Lam binder, Match xl, VarReplace from.
  const std::string& name() const;
  // Match xr, VarReplace to.
  const std::string& name2() const;
  const std::array<std::string, 2>& names() const;

  std::size_t arity() const;
  const Delta& child(std::size_t i) const;
  const std::vector<Delta>& children() const;
  const Delta& inner() const { return child(0); }

  Delta with_children(std::vector<Delta> children) const;

  // Delta-constructor count plus term nodes not determined by the source:
  // frame nodes (excluding the slot) and Replace targets.
  std::uint64_t size() const;

  friend bool operator==(const Delta& a, const Delta& b);
  friend bool operator!=(const Delta& a, const Delta& b) { return !(a == b); }
  friend Term src(const Delta& d);
  friend Term tgt(const Delta& d);

 private:
  struct Node;
  explicit Delta(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Delta make(DeltaKind kind, std::array<Term, 2> terms,
                    std::optional<Context> frame,
                    std::array<std::string, 2> names,
                    std::vector<Delta> children);
  std::shared_ptr<const Node> node_;
};

struct Delta::Node {
  DeltaKind kind;
  std::array<Term, 2> terms;
  std::optional<Context> frame;
  std::array<std::string, 2> names;
  std::vector<Delta> children;
  Term source;
  Term target;
};

class EndpointMismatch : public Error {
 public:
  EndpointMismatch(Term expected_source, Term actual);
  const Term& expected_source() const { return expected_; }
  const Term& actual() const { return actual_; }

 private:
  Term expected_;
  Term actual_;
};

Term src(const Delta& d);
Term tgt(const Delta& d);

// e (+) d. Throws EndpointMismatch unless src(d) is alpha-equal to e.
Term apply(const Term& e, const Delta& d);

// e2 (-) e: a delta from e to e2.
Delta diff(const Term& e, const Term& e2);

// Rewrites every Ins/Del so its frame is a single constructor.
Delta decompose(const Delta& d);

bool check_valid(const Delta& d, const Term& e);

// Builds C[d]: the congruence whose spine is `c` with Eps at every sibling.
// Fails when some frame of `c` has no congruence (pair patterns).
std::optional<Delta> spine(const Context& c, const Delta& inner);
// Inverse of spine(): if `d` is C[inner] (Eps nodes may stand for a whole
// spine segment), returns inner.
std::optional<Delta> strip_spine(const Context& c, const Delta& d);

// Structural equality modulo pushing Eps through congruences, e.g.
// Eps(inl ()) ~ inl ~{()}.
bool eps_equivalent(const Delta& a, const Delta& b);

// Pushes an Eps one constructor down, when it has a congruence.
std::optional<Delta> push_eps(const Delta& d);

// Number of nodes of kind `k` in `d`.
std::size_t count_kind(const Delta& d, DeltaKind k);

}  // namespace ilc

#endif  // ILC_DELTA_HPP_
