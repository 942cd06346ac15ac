#ifndef ILC_ALGEBRA_HPP_
#define ILC_ALGEBRA_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "ilc/delta.hpp"

namespace ilc {

class NotComposable : public Error {
 public:
  NotComposable(Term first_target, Term second_source);
  const Term& first_target() const { return first_target_; }
  const Term& second_source() const { return second_source_; }

 private:
  Term first_target_;
  Term second_source_;
};

class NotCoinitial : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  using Error::Error;
};

class UndefinedResidual : public Error {
 public:
  using Error::Error;
};

// The seven oriented equations of delta composition, in rewrite order.
enum class Equation {
  kEpsLeft,     // eps . d        = d
  kEpsRight,    // d . eps        = d
  kInsDel,      // C+[d] . C-[d'] = d . d'
  kInsCong,     // C+[d] . C[d']  = C+[d . d']
  kCongDel,     // C[d] . C-[d']  = C-[d . d']
  kInlBangInrBang,  // inl! d . inr! d' = inr (d . d')
  kInrBangInlBang,  // inr! d . inl! d' = inl (d . d')
};

inline constexpr std::array<Equation, 7> kAllEquations = {
    Equation::kEpsLeft,         Equation::kEpsRight, Equation::kInsDel,
    Equation::kInsCong,         Equation::kCongDel,  Equation::kInlBangInrBang,
    Equation::kInrBangInlBang};

std::string_view equation_name(Equation eq);

// One rewrite by `eq` at the root of d1 . d2, with any composition left on
// the right-hand side resolved by compose(). nullopt if `eq` does not match.
// Requires composable endpoints.
std::optional<Delta> rewrite(Equation eq, const Delta& d1, const Delta& d2);

// d1 . d2. Throws NotComposable unless tgt(d1) is alpha-equal to src(d2).
Delta compose(const Delta& d1, const Delta& d2);

// d1 is compatible with d2 (directional). Throws NotCoinitial.
bool compatible(const Delta& d1, const Delta& d2);

// d1 / d2: what remains of d1 once d2 has happened; its source is tgt(d2).
// Throws NotCoinitial, NotCompatible or UndefinedResidual.
Delta residual(const Delta& d1, const Delta& d2);

}  // namespace ilc

#endif  // ILC_ALGEBRA_HPP_
