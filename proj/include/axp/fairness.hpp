#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axp/explanations.hpp"

namespace axp {

/// Disjoint cover of the feature set: base (subgroup-independent), protected,
/// and equivalence (subgroup-dependent) features.
struct FeaturePartition {
  std::uint32_t base = 0;
  std::uint32_t prot = 0;
  std::uint32_t equiv = 0;

  std::uint32_t pe() const { return prot | equiv; }

  static FeaturePartition validated(std::uint32_t base, std::uint32_t prot,
                                    std::uint32_t equiv, int n);
};

/// Exact-match rewrite of a protected/equivalence literal set.
struct MappingRule {
  PartialAssignment source;
  PartialAssignment target;
};

/// Mapping between subgroups: base literals pass through untouched, the
/// P/E part is rewritten by the unique rule whose source matches it exactly.
struct MappingSpec {
  bool source_value = true;  // protected value of the source subgroup
  bool target_value = false;
  std::vector<MappingRule> rules;

  /// Rejects rules touching base features or sharing a source.
  static MappingSpec validated(bool source_value, bool target_value,
                               std::vector<MappingRule> rules,
                               const FeaturePartition& fp);
};

enum class FairnessReason { Fair, NoCriterion, CounterpartChangesDecision };

struct FairnessVerdict {
  Individual subject;
  bool fair = false;
  FairnessReason reason = FairnessReason::NoCriterion;
  std::optional<Explanation> criterion;
  std::optional<PartialAssignment> counterpart;
};

/// Base literals copied verbatim, P/E part rewritten; nullopt when the P/E
/// part matches no rule.
std::optional<PartialAssignment> map_explanation(const MappingSpec& ms,
                                                 const FeaturePartition& fp,
                                                 const PartialAssignment& xp);

bool is_fairness_criterion(const MappingSpec& ms, const FeaturePartition& fp,
                           const PartialAssignment& xp);

/// Fair iff some minimal explanation has a counterpart sufficient for the
/// same decision. Explanations are tried in lexicographic order and the
/// first qualifying pair is recorded.
FairnessVerdict audit_individual_fairness(const DecisionProcess& m, Individual x,
                                          const MappingSpec& ms,
                                          const FeaturePartition& fp,
                                          const ConstraintSet* k = nullptr);

struct MappingReport {
  std::vector<std::pair<PartialAssignment, PartialAssignment>> target_collisions;
  std::vector<Individual> uncovered;  // real individuals outside dom(M)
  bool consistent() const { return target_collisions.empty() && uncovered.empty(); }
};

/// (a) injectivity of the induced map, (b) [[K]] inside the mapping domain.
MappingReport check_mapping_consistency(const MappingSpec& ms,
                                        const FeaturePartition& fp,
                                        const ConstraintSet& k, int n);

// Partition file: lines `base:`, `protected:`, `equivalence:` with names.
FeaturePartition parse_partition(const std::string& text, const FeatureSpace& space);
std::string serialize_partition(const FeaturePartition& fp, const FeatureSpace& space);

// Mapping file: header `map <v> -> <v>`, then rules `{<lit>,...} => {<lit>,...}`.
MappingSpec parse_mapping(const std::string& text, const FeatureSpace& space,
                          const FeaturePartition& fp);
std::string serialize_mapping(const MappingSpec& ms, const FeatureSpace& space);

}  // namespace axp
