#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axp/formula.hpp"

namespace axp {

/// One background-knowledge constraint in restricted shape: either a negated
/// conjunction of literals ("forbid a & b") or an implication with a
/// conjunctive body and single-literal head ("a & b -> c").
struct Constraint {
  enum class Kind { Forbid, Implication };

  Kind kind = Kind::Forbid;
  std::vector<Literal> body;
  Literal head{};  // Implication only

  Formula formula() const;
  std::string to_string(const FeatureSpace& space) const;
};

/// Background knowledge K. Satisfiability (nonempty [[K]]) is enforced when
/// loaded through `validated`.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<Constraint> constraints);

  /// Throws DomainError when [[K]] is empty over an n-feature space.
  static ConstraintSet validated(std::vector<Constraint> constraints, int n);

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  bool empty() const { return constraints_.empty(); }

 private:
  std::vector<Constraint> constraints_;
  std::vector<Formula> formulas_;
};

struct RealPopulation {
  std::vector<Individual> members;
};

bool check_real(const ConstraintSet& k, Individual x);

/// Exact enumeration of [[K]]; throws DomainError when empty.
RealPopulation real_individuals(const ConstraintSet& k, int n);

/// Semantic check: some constraint is not independent of v.
bool mentions(const ConstraintSet& k, int v, int n);

/// All minimal zero-support negated conjunctions of at most max_arity
/// literals over the rows of `data`.
ConstraintSet mine_forbidden_patterns(const std::vector<Individual>& data, int n,
                                      int max_arity);

// BK file grammar: one constraint per line, `forbid <lit> & <lit> & ...` or
// `<lit> & ... -> <lit>`, literals NAME / !NAME, '#' comments.
ConstraintSet parse_bk(const std::string& text, const FeatureSpace& space);
std::string serialize_bk(const ConstraintSet& k, const FeatureSpace& space);

}  // namespace axp
