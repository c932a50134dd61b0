#include "axp/logic.hpp"

namespace axp {

bool satisfiable(std::span<const Formula> fs, const PartialAssignment& fixed, int n) {
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  std::uint32_t relevant = 0;
  for (const Formula& f : fs) relevant |= f.vars();
  std::uint32_t free_mask = relevant & ~fixed.mask;
  return detail::any_completion(free_mask, fixed.bits, [&](Individual x) {
    for (const Formula& f : fs) {
      if (!f.evaluate(x)) return false;
    }
    return true;
  });
}

bool entails(std::span<const Formula> fs, const PartialAssignment& assumptions,
             Literal goal, int n) {
  if (assumptions.mentions(goal.feature)) {
    // The assumption fixes the goal variable outright.
    if (assumptions.value(goal.feature) == goal.positive) return true;
    return !satisfiable(fs, assumptions, n);
  }
  return !satisfiable(fs, assumptions.with(goal.negated()), n);
}

bool is_independent(const Formula& f, int v, int n) {
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  std::uint32_t scan = f.vars() & ~(1u << v);
  bool dependent = detail::any_completion(scan, 0, [&](Individual x) {
    return f.evaluate(x) != f.evaluate(x.flipped(v));
  });
  return !dependent;
}

}  // namespace axp
