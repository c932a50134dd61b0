#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace axp;
using namespace axp::testing;

namespace {

PartialAssignment named(const FeatureSpace& space,
                        std::initializer_list<std::string> lits) {
  PartialAssignment pa;
  for (const std::string& l : lits) pa.assign(parse_literal(l, space));
  return pa;
}

}  // namespace

TEST_CASE("is_explanation on the bundled applicant") {
  Bundle b = load_bundle();
  const FeatureSpace& space = b.model.space();
  CHECK(is_explanation(b.model, named(space, {"A", "B", "!D", "P"}), true));
  CHECK_FALSE(is_explanation(b.model, {}, true));

  DecisionModel constant1 =
      DecisionModel::truth_table(letters(3), std::vector<bool>(8, true));
  CHECK(is_explanation(constant1, {}, true));
}

TEST_CASE("the golden trace replays step for step") {
  Bundle b = load_bundle();
  auto [expl, trace] =
      compute_explanation(b.model, b.hawa, ascending_order(10));
  std::string verdicts;
  for (const TraceStep& s : trace.steps) verdicts += s.flip_exists ? 'T' : 'F';
  CHECK(verdicts == "TFFFFTFTTF");
  CHECK(expl.literals == named(b.model.space(), {"A", "B", "!D", "P"}));
  CHECK(expl.decision);

  std::string table = render_trace(trace, b.model.space());
  CHECK(table ==
        "step   A  G  J  H  S  B  C  D  P  M  exists\n"
        "1      ?  0  0  0  0  1  0  0  1  1  T\n"
        "2      1  ?  0  0  0  1  0  0  1  1  F\n"
        "3      1  ?  ?  0  0  1  0  0  1  1  F\n"
        "4      1  ?  ?  ?  0  1  0  0  1  1  F\n"
        "5      1  ?  ?  ?  ?  1  0  0  1  1  F\n"
        "6      1  ?  ?  ?  ?  ?  0  0  1  1  T\n"
        "7      1  ?  ?  ?  ?  1  ?  0  1  1  F\n"
        "8      1  ?  ?  ?  ?  1  ?  ?  1  1  T\n"
        "9      1  ?  ?  ?  ?  1  ?  0  ?  1  T\n"
        "10     1  ?  ?  ?  ?  1  ?  0  1  ?  F\n"
        "final  1  ?  ?  ?  ?  1  ?  0  1  ?  \n");
}

TEST_CASE("Yahya's published explanation comes out under a documented order") {
  Bundle b = load_bundle();
  auto [expl, trace] =
      compute_explanation(b.model, b.yahya, ascending_order(10));
  CHECK(expl.literals == named(b.model.space(), {"A", "!S", "!D", "P", "M"}));
}

TEST_CASE("constant models explain everything with the empty set") {
  DecisionModel constant1 =
      DecisionModel::truth_table(letters(4), std::vector<bool>(16, true));
  auto [expl, trace] = compute_explanation(constant1, {Individual{0b1010}},
                                           ascending_order(4));
  CHECK(expl.literals.empty());
  auto all = enumerate_minimal_explanations(constant1, {Individual{3}});
  REQUIRE(all.size() == 1);
  CHECK(all[0].literals.empty());
}

TEST_CASE("single relevant feature") {
  // decision = a
  std::vector<bool> table(8);
  for (std::uint32_t i = 0; i < 8; ++i) table[i] = (i >> 2) & 1u;
  DecisionModel m = DecisionModel::truth_table(letters(3), table);
  auto all = enumerate_minimal_explanations(m, {Individual{0b001}});
  REQUIRE(all.size() == 1);
  CHECK(all[0].literals == PartialAssignment::of({{0, true}}));
}

TEST_CASE("enumeration matches the brute-force oracle on the bundle") {
  Bundle b = load_bundle();
  auto got = enumerate_minimal_explanations(b.model, b.yahya);
  auto expected = brute_minimal_explanations(b.model, b.yahya);
  REQUIRE(got.size() == expected.size());
  for (const Explanation& e : got) {
    CHECK(std::count(expected.begin(), expected.end(), e.literals) == 1);
  }
  bool has_published = std::any_of(got.begin(), got.end(), [&](const Explanation& e) {
    return e.literals == named(b.model.space(), {"A", "!S", "!D", "P", "M"});
  });
  CHECK(has_published);
  // Antichain.
  for (const Explanation& a : got) {
    for (const Explanation& b2 : got) {
      if (!(a.literals == b2.literals)) CHECK_FALSE(a.literals.subset_of(b2.literals));
    }
  }
}

TEST_CASE("greedy output is sound, minimal and enumerated") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 6;
    DecisionModel m = random_model(rng, n);
    Individual x = random_individual(rng, n);
    bool d = m.decide(x);
    auto enumerated = enumerate_minimal_explanations(m, x);
    for (int o = 0; o < 50; ++o) {
      auto [expl, trace] = compute_explanation(m, x, random_order(rng, n));
      CHECK(brute_sufficient(m, expl.literals, d));
      for (Literal l : expl.literals.literals()) {
        CHECK_FALSE(brute_sufficient(m, expl.literals.without(l.feature), d));
      }
      CHECK(std::any_of(enumerated.begin(), enumerated.end(),
                        [&](const Explanation& e) { return e.literals == expl.literals; }));
    }
  }
}

TEST_CASE("BK mode refuses unreal subjects") {
  Bundle b = load_bundle();
  CHECK_THROWS_AS(compute_explanation(b.model, b.hawa, ascending_order(10), &b.bk),
                  DomainError);
  CHECK_THROWS_AS(enumerate_minimal_explanations(b.model, b.hawa, &b.bk),
                  DomainError);
}

TEST_CASE("no-K explanations stay sufficient under any K") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 6;
    DecisionModel m = random_model(rng, n);
    ConstraintSet k = random_bk(rng, n, 2);
    Individual x = random_individual(rng, n);
    auto [expl, trace] = compute_explanation(m, x, random_order(rng, n));
    CHECK(is_explanation(m, expl.literals, expl.decision, &k));
  }
}

TEST_CASE("vacuous sufficiency under K is sufficiency over no one") {
  // K forbids a; xp = {a} cannot be extended by any real individual.
  FeatureSpace space = letters(3);
  ConstraintSet k = ConstraintSet::validated(
      {{Constraint::Kind::Forbid, {{0, true}}, {}}}, 3);
  std::mt19937 rng(1);
  DecisionModel m = random_model(rng, 3);
  PartialAssignment xp = PartialAssignment::of({{0, true}});
  CHECK(is_explanation(m, xp, true, &k));
  CHECK(is_explanation(m, xp, false, &k));
}
