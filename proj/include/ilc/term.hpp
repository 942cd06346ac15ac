#ifndef ILC_TERM_HPP_
#define ILC_TERM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ilc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TermKind : std::uint8_t {
  kHole,       // `_`, an unfilled program position
  kVar,
  kUnit,
  kInl,
  kInr,
  kMatchSum,   // match s { inl xl -> left | inr xr -> right }
  kPair,
  kMatchPair,  // match s { (x1, x2) -> body }
  kLam,
  kApp,
  kRoll,
  kUnroll,
  kSlot,       // the `@` marker of a one-hole context; never part of a program
};

std::string_view kind_name(TermKind kind);

using NameSet = std::set<std::string>;

// Immutable abstract syntax tree. Copies share structure.
class Term {
 public:
  static Term hole();
  static Term var(std::string name);
  static Term unit();
  static Term inl(Term body);
  static Term inr(Term body);
  static Term match_sum(Term scrutinee, std::string xl, Term left,
                        std::string xr, Term right);
  static Term pair(Term first, Term second);
  static Term match_pair(Term scrutinee, std::string x1, std::string x2,
                         Term body);
  static Term lam(std::string binder, Term body);
  static Term app(Term fn, Term arg);
  static Term roll(Term body);
  static Term unroll(Term body);
  static Term slot();

  // Generic constructor; validates arity and names for `kind`.
  static Term make(TermKind kind, std::array<std::string, 2> names,
                   std::vector<Term> children);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }

  // Var name, Lam binder, MatchSum xl, MatchPair x1.
  const std::string& name() const;
  // MatchSum xr, MatchPair x2.
  const std::string& name2() const;
  const std::array<std::string, 2>& names() const;

  std::size_t arity() const;
  const Term& child(std::size_t i) const;
  const std::vector<Term>& children() const;

  const Term& body() const { return child(kind() == TermKind::kMatchPair ? 1 : 0); }
  const Term& scrutinee() const { return child(0); }
  const Term& left() const { return child(1); }
  const Term& right() const { return child(2); }
  const Term& first() const { return child(0); }
  const Term& second() const { return child(1); }
  const Term& fn() const { return child(0); }
  const Term& arg() const { return child(1); }
  const std::string& binder() const { return name(); }

  // Node count (saturates at UINT64_MAX). Cached, O(1).
  std::uint64_t size() const;

  // Same kind and names, new children.
  Term with_children(std::vector<Term> children) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  // Structural equality (binder names significant).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  TermKind kind;
  std::array<std::string, 2> names;
  std::vector<Term> children;
  std::uint64_t size;
};

// Names bound by `t` over its child `i`.
std::vector<std::string> binders_over(const Term& t, std::size_t i);

bool is_identifier(std::string_view s);

// Value grammar: inl v | inr v | (v, v) | fun x -> e | () | roll v.
bool is_value(const Term& t);

NameSet free_vars(const Term& t);
bool is_free_in(const std::string& x, const Term& t);
bool is_closed(const Term& t);

// Equality up to consistent renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);

// Number of `kSlot` leaves.
std::size_t count_slots(const Term& t);

// A term with exactly one slot.
class Context {
 public:
  // Throws InvalidContext unless `t` has exactly one slot.
  explicit Context(Term t);
  static Context empty() { return Context(Term::slot()); }

  const Term& term() const { return term_; }
  bool is_empty() const { return term_.is(TermKind::kSlot); }
  // True when the slot is an immediate child of the root.
  bool is_frame() const;
  // Index of the root child containing the slot; requires !is_empty().
  std::size_t slot_child() const;
  // Non-slot nodes.
  std::uint64_t size() const { return term_.size() - 1; }

  // Splits C = F[C'] with F a depth-1 frame. Requires !is_empty().
  std::pair<Context, Context> split_outer() const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.term_ == b.term_;
  }

 private:
  Term term_;
};

class InvalidContext : public Error {
 public:
  using Error::Error;
};

// Replaces the slot by `e` verbatim. Free variables of `e` may be captured.
Term plug(const Context& c, const Term& e);
// Composes contexts: outer[inner[@]].
Context plug(const Context& outer, const Context& inner);

bool alpha_eq(const Context& a, const Context& b);

// Fresh identifiers look like `base!n`. The parser rejects `!` in names so
// they can never collide with user-written ones.
std::string fresh_name(std::string_view base, const NameSet& avoid);

// Resets the calling thread's fresh-name counter for the scope's lifetime.
class FreshNameScope {
 public:
  FreshNameScope();
  ~FreshNameScope();
  FreshNameScope(const FreshNameScope&) = delete;
  FreshNameScope& operator=(const FreshNameScope&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace ilc

#endif  // ILC_TERM_HPP_
