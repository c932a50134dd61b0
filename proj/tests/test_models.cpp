#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace axp;
using namespace axp::testing;

TEST_CASE("reference model decides the bundled applicants favorably") {
  Bundle b = load_bundle();
  CHECK(b.model.decide(b.hawa));
  CHECK(b.model.decide(b.yahya));

  DecisionModel constant1 =
      DecisionModel::truth_table(letters(3), std::vector<bool>(8, true));
  for (Individual x : all_individuals(3)) CHECK(constant1.decide(x));
}

TEST_CASE("table indexing is big-endian over the feature order") {
  FeatureSpace space = letters(3);
  std::vector<bool> table(8, false);
  table[0b110] = true;  // a=1, b=1, c=0
  DecisionModel m = DecisionModel::truth_table(space, table);
  Individual x = Individual{}.with(0, true).with(1, true);
  CHECK(m.decide(x));
  CHECK(table_index(x, 3) == 0b110);
  CHECK(individual_from_index(0b110, 3) == x);
}

TEST_CASE("exists_flip matches the worked trace oracle calls") {
  Bundle b = load_bundle();
  int n = b.model.feature_count();
  PartialAssignment full = PartialAssignment::all_of(b.hawa, n);

  int a = b.model.space().require("A");
  int g = b.model.space().require("G");
  CHECK(exists_flip(b.model, full.without(a), true));
  CHECK_FALSE(exists_flip(b.model, full.without(g), true));
  CHECK_FALSE(exists_flip(b.model, full, true));
}

TEST_CASE("exists_flip is monotone and witness-sound") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 7;
    DecisionModel m = random_model(rng, n);
    ConstraintSet k = random_bk(rng, n, 2);
    Individual x = random_individual(rng, n);
    bool d = m.decide(x);
    PartialAssignment full = PartialAssignment::all_of(x, n);
    CHECK_FALSE(exists_flip(m, full, d, &k));

    std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << n) - 1);
    std::uint32_t sub = mask_dist(rng), super = sub | mask_dist(rng);
    PartialAssignment small{sub, x.bits & sub}, big{super, x.bits & super};
    if (exists_flip(m, big, d, &k)) CHECK(exists_flip(m, small, d, &k));

    // Restricted search never uses a witness outside [[K]].
    CHECK(exists_flip(m, small, d, &k) == !brute_sufficient(m, small, d, &k));
  }
}

TEST_CASE("equivalence under background knowledge") {
  Bundle b = load_bundle();
  CHECK(equiv_under_bk(b.model, b.model, b.bk));

  auto base = std::make_shared<DecisionModel>(b.model);
  // Flip the decision of an unreal individual only.
  Individual unreal = parse_individual(
      "A=0,G=0,J=0,H=0,S=0,B=0,C=0,D=0,P=1,M=1", b.model.space());
  REQUIRE_FALSE(check_real(b.bk, unreal));
  ModelOverride twin(base, {{unreal, !b.model.decide(unreal)}});
  CHECK(equiv_under_bk(b.model, twin, b.bk));

  DecisionModel negation = DecisionModel::from_json(b.model.to_json());
  // Global negation built as a truth-table.
  std::string json = b.model.to_json();
  auto pos = json.find("\"table\": \"");
  REQUIRE(pos != std::string::npos);
  for (std::size_t i = pos + 10; json[i] == '0' || json[i] == '1'; ++i) {
    json[i] = json[i] == '0' ? '1' : '0';
  }
  DecisionModel negated = DecisionModel::from_json(json);
  CHECK_FALSE(equiv_under_bk(b.model, negated, b.bk));
}

TEST_CASE("model files round-trip") {
  Bundle b = load_bundle();
  CHECK(DecisionModel::from_json(b.model.to_json()) == b.model);

  DecisionModel lt = DecisionModel::linear_threshold(
      letters(3), {"1.5", "-0.25", "2"}, "-1");
  CHECK(DecisionModel::from_json(lt.to_json()) == lt);
  CHECK(lt.decide(Individual{}.with(0, true)));        // 1.5 - 1 > 0
  CHECK_FALSE(lt.decide(Individual{}.with(1, true)));  // -0.25 - 1 < 0
}

TEST_CASE("load rejects malformed models") {
  CHECK_THROWS_AS(DecisionModel::from_json("{"), ParseError);
  CHECK_THROWS_AS(
      DecisionModel::truth_table(letters(3), std::vector<bool>(7, false)),
      ParseError);
  // a=1 sums to exactly zero.
  CHECK_THROWS_AS(
      DecisionModel::linear_threshold(letters(2), {"1", "0.5"}, "-1"),
      ParseError);
}

TEST_CASE("override with no exceptions matches its base everywhere") {
  std::mt19937 rng(5);
  auto base = std::make_shared<DecisionModel>(random_model(rng, 8));
  ModelOverride same(base, {});
  for (Individual x : all_individuals(8)) CHECK(same.decide(x) == base->decide(x));
}
