#pragma once

#include <optional>

#include "axp/explanations.hpp"

namespace axp {

/// Within context Φ (a conjunction of literals avoiding p and q), knowing
/// q = nu_q lets one infer p = nu_p under K, and some real individual
/// satisfies the premises.
struct ProxyWitness {
  int proxy = 0;              // q
  PartialAssignment context;  // Φ
  bool nu_q = true;
  bool nu_p = true;

  bool operator==(const ProxyWitness&) const = default;
};

enum class ExplanationClass { Unbiased, ExplicitlyBiased, ProxyFactor, Vacuous };

struct ExplanationEvidence {
  Explanation explanation;
  ExplanationClass cls = ExplanationClass::Unbiased;
  bool nu = false;  // ProxyFactor only: the inferred protected value
};

struct BiasVerdict {
  Individual subject;
  bool explicit_bias = false;
  std::optional<bool> bk_aware_bias;
  std::vector<ExplanationEvidence> evidence;
};

/// Flipping the protected feature changes the decision.
bool is_biased_decision(const DecisionProcess& m, Individual x, int p);

/// Explicit-bias verdict via enumeration: biased iff every minimal
/// explanation carries a literal over p.
BiasVerdict audit_explicit_bias(const DecisionProcess& m, Individual x, int p);

/// A witness individual with a biased decision, if the process has one.
std::optional<Individual> is_process_biased(const DecisionProcess& m, int p);

/// All proxy witnesses for p with contexts of at most max_context_arity
/// literals, ordered by proxy index, context, then values.
std::vector<ProxyWitness> find_proxies(const ConstraintSet& k, int p,
                                       int max_context_arity, int n);

struct ProxyFactorResult {
  std::optional<bool> nu;  // the shared protected value, when entailed
  bool vacuous = false;    // K plus the explanation literals is unsatisfiable
};

/// p absent from the explanation yet every real individual satisfying it has
/// p = nu. Vacuously-entailing explanations are flagged, not counted.
ProxyFactorResult is_factor_of_proxy_discrimination(const PartialAssignment& xp,
                                                    const ConstraintSet& k, int p,
                                                    int n);

/// Biased under K: every minimal explanation under K is explicitly biased or
/// a factor of proxy discrimination.
BiasVerdict audit_bk_aware_bias(const DecisionProcess& m, Individual x,
                                const ConstraintSet& k, int p);

/// Builds the flipped twin of an unbiased model from a proxy witness: picks
/// the first real individual matching the witness premises, flips its
/// protected feature to reach an unreal individual, and inverts the decision
/// there only. The twin is K-equivalent to the base yet biased.
ModelOverride construct_biased_twin(std::shared_ptr<const DecisionProcess> m,
                                    const ConstraintSet& k, const ProxyWitness& w,
                                    int p);

}  // namespace axp
