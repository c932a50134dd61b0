#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axp/fairness.hpp"
#include "axp/proxy_bias.hpp"

namespace axp {

/// One reproducible invocation: same inputs and parameters give a
/// byte-identical report body. Timing never enters the body.
struct AuditRun {
  std::string command;
  std::vector<std::pair<std::string, std::string>> input_digests;  // label, hex
  std::vector<std::pair<std::string, std::string>> parameters;
  double seconds = 0.0;
};

std::string fnv1a_hex(const std::string& bytes);

struct AuditOptions {
  int protected_feature = -1;
  const ConstraintSet* bk = nullptr;
  const MappingSpec* mapping = nullptr;
  const FeaturePartition* partition = nullptr;
  int context_arity = 2;
};

/// Full audit document: header, then per-individual explanation, bias and
/// fairness sections, then a proxy/process summary block.
std::string audit_report(const DecisionProcess& m, const std::vector<Individual>& subjects,
                         const AuditOptions& opts, const AuditRun& run);

std::string explanation_line(const Explanation& e, const FeatureSpace& space);

}  // namespace axp
