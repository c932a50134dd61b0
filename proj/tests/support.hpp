#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// search paths (exists_flip, the lattice scan): sufficiency is re-derived by
// scanning all 2^n individuals directly.

#include <algorithm>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "axp/dataset.hpp"
#include "axp/fairness.hpp"
#include "axp/proxy_bias.hpp"

namespace axp::testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string bundle_path(const std::string& name) {
  return std::string(AXP_BUNDLE_DIR) + "/" + name;
}

struct Bundle {
  DecisionModel model;
  ConstraintSet bk;
  FeaturePartition partition;
  MappingSpec mapping;
  Dataset dataset;
  Individual hawa;
  Individual yahya;
};

inline Bundle load_bundle() {
  DecisionModel m = DecisionModel::from_json(slurp(bundle_path("credit_model.json")));
  const FeatureSpace& space = m.space();
  ConstraintSet k = parse_bk(slurp(bundle_path("credit.bk")), space);
  FeaturePartition fp = parse_partition(slurp(bundle_path("credit.partition")), space);
  MappingSpec ms = parse_mapping(slurp(bundle_path("credit.mapping")), space, fp);
  Dataset ds = Dataset::parse(slurp(bundle_path("credit_dataset.csv")));
  Individual hawa =
      parse_individual("A=1,G=0,J=0,H=0,S=0,B=1,C=0,D=0,P=1,M=1", space);
  Individual yahya =
      parse_individual("A=1,G=1,J=0,H=0,S=0,B=0,C=0,D=0,P=1,M=1", space);
  return {std::move(m), std::move(k), fp, std::move(ms), std::move(ds), hawa, yahya};
}

inline std::vector<Individual> all_individuals(int n) {
  std::vector<Individual> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) out.push_back({b});
  return out;
}

/// Direct sufficiency check by full scan.
inline bool brute_sufficient(const DecisionProcess& m, const PartialAssignment& xp,
                             bool d, const ConstraintSet* k = nullptr) {
  for (Individual x : all_individuals(m.feature_count())) {
    if (!xp.consistent_with(x)) continue;
    if (k && !check_real(*k, x)) continue;
    if (m.decide(x) != d) return false;
  }
  return true;
}

/// All subset-minimal sufficient subsets of x, minimality by pairwise
/// inclusion over the full sufficient family.
inline std::vector<PartialAssignment> brute_minimal_explanations(
    const DecisionProcess& m, Individual x, const ConstraintSet* k = nullptr) {
  int n = m.feature_count();
  bool d = m.decide(x);
  std::vector<PartialAssignment> sufficient;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PartialAssignment xp{mask, x.bits & mask};
    if (brute_sufficient(m, xp, d, k)) sufficient.push_back(xp);
  }
  std::vector<PartialAssignment> minimal;
  for (const PartialAssignment& a : sufficient) {
    bool has_smaller = false;
    for (const PartialAssignment& b : sufficient) {
      if (!(a == b) && b.subset_of(a)) has_smaller = true;
    }
    if (!has_smaller) minimal.push_back(a);
  }
  return minimal;
}

inline FeatureSpace letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return FeatureSpace(names);
}

inline DecisionModel random_model(std::mt19937& rng, int n) {
  std::vector<bool> table(std::size_t{1} << n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = coin(rng);
  return DecisionModel::truth_table(letters(n), std::move(table));
}

inline Individual random_individual(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
  return {dist(rng)};
}

/// Random satisfiable constraint set of small forbidden patterns.
inline ConstraintSet random_bk(std::mt19937& rng, int n, int max_constraints,
                               std::uint32_t avoid_mask = 0) {
  std::uniform_int_distribution<int> count_dist(1, max_constraints);
  std::uniform_int_distribution<int> arity_dist(1, 3);
  std::uniform_int_distribution<int> feat_dist(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Constraint> cs;
    int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
      PartialAssignment pa;
      int arity = arity_dist(rng);
      for (int j = 0; j < arity; ++j) {
        int f = feat_dist(rng);
        if ((avoid_mask >> f) & 1u) continue;
        pa.assign({f, coin(rng)});
      }
      if (pa.empty()) continue;
      cs.push_back({Constraint::Kind::Forbid, pa.literals(), {}});
    }
    if (cs.empty()) continue;
    try {
      return ConstraintSet::validated(std::move(cs), n);
    } catch (const DomainError&) {
      continue;  // unsatisfiable draw, retry
    }
  }
  return ConstraintSet{};
}

inline std::vector<int> random_order(std::mt19937& rng, int n) {
  std::vector<int> order = ascending_order(n);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace axp::testing
