#pragma once

#include <vector>

#include "axp/decision_model.hpp"

namespace axp {

struct Explanation {
  PartialAssignment literals;
  bool decision = true;
  bool bk_aware = false;
  /// K plus the literals is unsatisfiable: sufficiency holds over an empty
  /// set of real extensions. Surfaced in reports, never silently useful.
  bool vacuous = false;
};

struct TraceStep {
  int feature = 0;
  bool flip_exists = false;  // whether some agreeing individual gets the other decision
  bool kept = false;
};

struct ExplanationTrace {
  Individual subject;
  std::vector<TraceStep> steps;
};

/// Sufficiency: no extension of xp (real extension, when k is given)
/// receives a decision other than d.
bool is_explanation(const DecisionProcess& m, const PartialAssignment& xp, bool d,
                    const ConstraintSet* k = nullptr);

/// Greedy deletion over the features in `order`; the result is subset-minimal.
/// In BK mode refuses individuals outside [[K]].
std::pair<Explanation, ExplanationTrace> compute_explanation(
    const DecisionProcess& m, Individual x, const std::vector<int>& order,
    const ConstraintSet* k = nullptr);

/// All subset-minimal sufficient subsets of x, as an antichain, ordered
/// lexicographically by sorted literal indices.
std::vector<Explanation> enumerate_minimal_explanations(
    const DecisionProcess& m, Individual x, const ConstraintSet* k = nullptr);

/// Tabular trace text: one row per step, '?' for dropped
/// literals, T/F verdict column, then a final row.
std::string render_trace(const ExplanationTrace& trace, const FeatureSpace& space);

std::vector<int> ascending_order(int n);

}  // namespace axp
