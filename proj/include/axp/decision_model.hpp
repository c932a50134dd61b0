#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axp/background_knowledge.hpp"
#include "axp/types.hpp"

namespace axp {

/// Total binary decision function over the feature space.
class DecisionProcess {
 public:
  virtual ~DecisionProcess() = default;
  virtual bool decide(Individual x) const = 0;
  virtual const FeatureSpace& space() const = 0;
  int feature_count() const { return space().size(); }
};

/// Big-endian table index: feature 0 is the most significant bit.
std::uint32_t table_index(Individual x, int n);
Individual individual_from_index(std::uint32_t index, int n);

class DecisionModel : public DecisionProcess {
 public:
  enum class Kind { TruthTable, LinearThreshold };

  static DecisionModel truth_table(FeatureSpace space, std::vector<bool> table);

  /// Weights and bias are decimal strings, kept exact via a shared power-of-ten
  /// scale. An individual whose weighted sum lands exactly on the threshold is
  /// rejected (the decision function must be total and deterministic).
  static DecisionModel linear_threshold(FeatureSpace space,
                                        std::vector<std::string> weights,
                                        std::string bias);

  static DecisionModel from_json(const std::string& text);
  std::string to_json() const;

  bool decide(Individual x) const override;
  const FeatureSpace& space() const override { return space_; }
  Kind kind() const { return kind_; }

  bool operator==(const DecisionModel& other) const;

 private:
  DecisionModel() = default;

  FeatureSpace space_;
  Kind kind_ = Kind::TruthTable;
  std::vector<bool> table_;
  std::vector<std::int64_t> weights_;  // scaled by 10^scale_
  std::int64_t bias_ = 0;
  int scale_ = 0;
};

/// Base model with finitely many per-individual decision exceptions.
class ModelOverride : public DecisionProcess {
 public:
  ModelOverride(std::shared_ptr<const DecisionProcess> base,
                std::map<Individual, bool> exceptions)
      : base_(std::move(base)), exceptions_(std::move(exceptions)) {}

  bool decide(Individual x) const override {
    auto it = exceptions_.find(x);
    return it == exceptions_.end() ? base_->decide(x) : it->second;
  }
  const FeatureSpace& space() const override { return base_->space(); }
  const std::map<Individual, bool>& exceptions() const { return exceptions_; }

 private:
  std::shared_ptr<const DecisionProcess> base_;
  std::map<Individual, bool> exceptions_;
};

/// Does some total x' extending xp decide differently from d? With k, only
/// real extensions (x' in [[K]]) count.
bool exists_flip(const DecisionProcess& m, const PartialAssignment& xp, bool d,
                 const ConstraintSet* k = nullptr);

/// Decision processes agree on every individual of [[K]].
bool equiv_under_bk(const DecisionProcess& m1, const DecisionProcess& m2,
                    const ConstraintSet& k);

}  // namespace axp
