#pragma once

#include <memory>
#include <string>
#include <vector>

#include "axp/types.hpp"

namespace axp {

/// Propositional formula over the feature space. Immutable after construction.
class Formula {
 public:
  static Formula constant(bool value);
  static Formula lit(Literal l);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implication(Formula body, Formula head);

  /// Conjunction of the literals of a partial assignment.
  static Formula of_assignment(const PartialAssignment& pa);

  bool evaluate(Individual x) const;
  std::uint32_t vars() const { return vars_; }  // features mentioned, as a mask

  std::string to_string(const FeatureSpace& space) const;

 private:
  enum class Kind { True, False, Lit, Not, And, Or, Implies };

  Formula(Kind k, Literal l, std::vector<Formula> kids);

  Kind kind_;
  Literal lit_{};
  std::shared_ptr<const std::vector<Formula>> kids_;
  std::uint32_t vars_ = 0;
};

}  // namespace axp
