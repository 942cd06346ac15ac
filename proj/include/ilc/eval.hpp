#ifndef ILC_EVAL_HPP_
#define ILC_EVAL_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ilc/delta.hpp"
#include "ilc/term.hpp"

namespace ilc {

// Terms produced during evaluation may not grow past this many nodes; a run
// that would is reported as out of fuel.
inline constexpr std::uint64_t kMaxTermSize = 200000;

// Budget of elimination steps (beta, match, unroll).
class Fuel {
 public:
  explicit Fuel(std::uint64_t steps) : remaining_(steps) {}
  std::uint64_t remaining() const { return remaining_; }
  // Spends one step at `at`; throws OutOfFuelError when none are left.
  void consume(const Term& at);

 private:
  std::uint64_t remaining_;
};

struct Val {
  Term value;
};
struct Stuck {
  std::string reason;
  Term at;
};
struct OutOfFuel {
  Term remaining;
};
using EvalOutcome = std::variant<Val, Stuck, OutOfFuel>;

class StuckError : public Error {
 public:
  StuckError(std::string reason, Term at);
  const std::string& reason() const { return reason_; }
  const Term& at() const { return at_; }

 private:
  std::string reason_;
  Term at_;
};

class OutOfFuelError : public Error {
 public:
  explicit OutOfFuelError(Term at);
  const Term& at() const { return at_; }

 private:
  Term at_;
};

// [v/x]e, capture-avoiding.
Term subst(const Term& e, const Term& v, const std::string& x);

// Call-by-value, left to right. Never throws for closed input.
EvalOutcome eval(const Term& e, std::uint64_t fuel);
// As eval(), but throws StuckError/OutOfFuelError and shares `fuel`.
Term eval_value(const Term& e, Fuel& fuel);

// [dv/x]d: src is [src dv/x](src d) and tgt is [tgt dv/x](tgt d).
Delta delta_subst(const Delta& d, const Delta& dv, const std::string& x);

enum class Endpoint { kSource, kTarget, kBoth };
std::string_view endpoint_name(Endpoint e);

class DeltaEvalError : public Error {
 public:
  enum class Cause { kStuck, kOutOfFuel };
  DeltaEvalError(Endpoint endpoint, Cause cause, std::string reason, Term at);
  Endpoint endpoint() const { return endpoint_; }
  Cause cause() const { return cause_; }
  const std::string& reason() const { return reason_; }
  const Term& at() const { return at_; }

 private:
  Endpoint endpoint_;
  Cause cause_;
  std::string reason_;
  Term at_;
};

// Delta-evaluation rules, for coverage accounting.
enum class Rule : std::uint8_t {
  kInlCong, kInlBang, kInlIns, kInlDel,
  kInrCong, kInrBang, kInrIns, kInrDel,
  kMatchInl, kMatchInr,                // scrutinee changes under the same tag
  kMatchBangInl, kMatchBangInr,        // scrutinee flips its tag
  kMatchScrutInsInl, kMatchScrutInsInr,  // scrutinee gains its tag
  kMatchIns, kMatchDel,                // a match inserted/deleted around
  kPairCong, kPairInsLeft, kPairInsRight, kPairDelLeft, kPairDelRight,
  kAppCong, kAppInsLeft, kAppInsRight, kAppDelLeft, kAppDelRight,
  kRollCong, kRollIns, kRollDel,
  kUnrollCong, kUnrollIns, kUnrollDel,
  // Not structured: base cases and the fallback.
  kEps, kReplace, kLamValue, kFallback,
  kCount,
};

inline constexpr std::size_t kRuleCount = static_cast<std::size_t>(Rule::kCount);
inline constexpr std::size_t kStructuredRuleCount =
    static_cast<std::size_t>(Rule::kEps);

std::string_view rule_name(Rule r);

struct RuleStats {
  std::array<std::uint64_t, kRuleCount> fired{};

  void hit(Rule r) { ++fired[static_cast<std::size_t>(r)]; }
  std::uint64_t count(Rule r) const {
    return fired[static_cast<std::size_t>(r)];
  }
  RuleStats& operator+=(const RuleStats& other);
};

// Evaluates a program change to a value change. The result's endpoints are
// the values of src(d) and tgt(d). Throws DeltaEvalError.
Delta delta_eval(const Delta& d, Fuel& fuel, RuleStats* stats = nullptr);
Delta delta_eval(const Delta& d, std::uint64_t fuel,
                 RuleStats* stats = nullptr);

}  // namespace ilc

#endif  // ILC_EVAL_HPP_
