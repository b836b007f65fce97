#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/documents.hpp"
#include "choiceaudit/fixtures.hpp"
#include "choiceaudit/operators.hpp"
#include "choiceaudit/oracle.hpp"
#include "choiceaudit/rationalize.hpp"

using namespace choiceaudit;

namespace {

Universe make_xy() { return Universe({"x", "y"}); }
Universe make_xyz() { return Universe({"x", "y", "z"}); }

std::uint64_t count_tables(int n, OperatorClass c) {
  std::uint64_t count = 0;
  for_each_operator_table(n, c, [&](std::span<const MenuMask>) { ++count; });
  return count;
}

// Singleton choices honest, every other menu picks z: passes NBC, CCI, ND.
ChoiceDataset stubborn_z() {
  return ChoiceDataset(make_xyz(), {{1, 0}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2}});
}

}  // namespace

TEST_CASE("linear order enumeration is lexicographic") {
  const auto orders = enumerate_linear_orders(make_xyz());
  REQUIRE(orders.size() == 6);
  CHECK(orders.front().ranking() == std::vector<AltId>{0, 1, 2});
  CHECK(orders.back().ranking() == std::vector<AltId>{2, 1, 0});
  std::set<std::vector<AltId>> distinct;
  for (const auto& o : orders) distinct.insert(o.ranking());
  CHECK(distinct.size() == 6);
}

TEST_CASE("operator class sizes at small n") {
  CHECK(count_tables(2, OperatorClass::All) == 27);
  CHECK(count_tables(3, OperatorClass::All) == 823543);
  CHECK(count_tables(2, OperatorClass::Monotone) == 11);
  CHECK(count_tables(2, OperatorClass::DoublyMonotone) == 2);
  CHECK(count_tables(3, OperatorClass::DoublyMonotone) == 6);
  CHECK(count_tables(3, OperatorClass::DoublyMonotoneIdempotent) == 1);
  CHECK(count_tables(2, OperatorClass::Grounded) == 3);
  CHECK(count_tables(3, OperatorClass::Grounded) == 189);
  CHECK(count_tables(2, OperatorClass::GroundedMonotone) == 1);
  CHECK(count_tables(3, OperatorClass::GroundedMonotone) == 1);
}

TEST_CASE("pruned enumerations equal filtered full enumerations") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::vector<MenuMask>> pruned;
    for_each_operator_table(n, OperatorClass::Monotone, [&](std::span<const MenuMask> t) {
      pruned.emplace_back(t.begin(), t.end());
    });
    std::vector<std::vector<MenuMask>> filtered;
    for_each_operator_table(n, OperatorClass::All, [&](std::span<const MenuMask> t) {
      if (detail::k_monotone(t, n, nullptr)) filtered.emplace_back(t.begin(), t.end());
    });
    CHECK(pruned == filtered);
  }

  std::vector<std::vector<MenuMask>> grounded;
  for_each_operator_table(3, OperatorClass::Grounded, [&](std::span<const MenuMask> t) {
    grounded.emplace_back(t.begin(), t.end());
  });
  std::vector<std::vector<MenuMask>> grounded_filtered;
  for_each_operator_table(3, OperatorClass::All, [&](std::span<const MenuMask> t) {
    if (detail::k_grounded_consistent(t, 3, nullptr) &&
        detail::k_singleton_idempotent(t, 3, nullptr))
      grounded_filtered.emplace_back(t.begin(), t.end());
  });
  CHECK(grounded == grounded_filtered);

  std::vector<std::vector<MenuMask>> mono_idem;
  for_each_operator_table(3, OperatorClass::MonotoneIdempotent,
                          [&](std::span<const MenuMask> t) {
                            mono_idem.emplace_back(t.begin(), t.end());
                          });
  std::vector<std::vector<MenuMask>> mono_idem_filtered;
  for_each_operator_table(3, OperatorClass::Monotone, [&](std::span<const MenuMask> t) {
    if (detail::k_idempotent(t, 3, nullptr)) mono_idem_filtered.emplace_back(t.begin(), t.end());
  });
  CHECK(mono_idem == mono_idem_filtered);
}

TEST_CASE("enumeration caps reject large universes") {
  CHECK_THROWS_AS(count_tables(4, OperatorClass::All), std::invalid_argument);
  CHECK_THROWS_AS(count_tables(5, OperatorClass::Monotone), std::invalid_argument);
  CHECK_THROWS_AS(count_tables(4, OperatorClass::Grounded), std::invalid_argument);
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(enumerate_linear_orders(Universe(labels)), std::invalid_argument);
}

TEST_CASE("total choice functions enumerate lexicographically") {
  CHECK(total_choice_function_count(2) == 8);
  CHECK(total_choice_function_count(3) == 2187);

  const Universe u = make_xy();
  const auto d3 = choice_function_from_index(u, 3);
  CHECK(d3.choice(1) == 0);
  CHECK(d3.choice(2) == 1);
  CHECK(d3.choice(3) == 1);

  std::uint64_t index = 0;
  for_each_choice_function(2, [&](std::span<const AltId> choices) {
    const auto from_index = choice_function_from_index(u, index);
    for (MenuMask m = 1; m <= 3; ++m)
      CHECK(from_index.choice(m) == choices[static_cast<std::size_t>(m) - 1]);
    ++index;
  });
  CHECK(index == 8);
}

TEST_CASE("acyclicity characterizes monotone-operator representability") {
  const auto r2 = verify_characterization(TheoremId::Thm1, 2);
  CHECK(r2.equivalence_holds);
  CHECK(r2.counts.at("datasets") == 8);
  CHECK(r2.counts.at("axiom-positive") == r2.counts.at("representable"));
  CHECK(r2.counts.at("mismatches") == 0);
  CHECK(r2.counts.at("operators") == 11);
  CHECK(r2.counterexamples.empty());

  const auto r3 = verify_characterization(TheoremId::Thm1, 3);
  CHECK(r3.equivalence_holds);
  CHECK(r3.counts.at("datasets") == 2187);
  CHECK(r3.counts.at("mismatches") == 0);
  CHECK(r3.counts.at("operators") == count_tables(3, OperatorClass::Monotone));
}

TEST_CASE("the binary/chain/distinctness battery is not sufficient at three alternatives") {
  const auto r2 = verify_characterization(TheoremId::Thm2, 2);
  CHECK(r2.equivalence_holds);
  CHECK(r2.counts.at("axiom-positive") == 4);
  CHECK(r2.counts.at("representable") == 4);
  CHECK(r2.counts.at("mismatches") == 0);

  const auto r3 = verify_characterization(TheoremId::Thm2, 3);
  CHECK_FALSE(r3.equivalence_holds);
  CHECK(r3.counts.at("mismatches") > 0);
  REQUIRE_FALSE(r3.counterexamples.empty());
  for (const auto& record : r3.counterexamples) {
    bool representable = true;
    bool axioms = true;
    for (const auto& [name, holds] : record.verdicts) {
      if (name == "representable")
        representable = holds;
      else
        axioms = axioms && holds;
    }
    // Every recorded mismatch passes the axioms yet has no representation.
    CHECK(axioms);
    CHECK_FALSE(representable);
  }
}

TEST_CASE("the stubborn dataset passes the battery but defeats every relabelling agent") {
  const auto d = stubborn_z();
  CHECK(check_nbc(d).holds);
  CHECK(check_cci(d).holds);
  CHECK(check_nd(d).holds);

  const auto orders = enumerate_linear_orders(d.universe());
  const auto ops = enumerate_operators(d.universe(), OperatorClass::DoublyMonotone);
  CHECK(orders.size() * ops.size() == 36);
  for (const auto& order : orders)
    for (const auto& op : ops) {
      const AgentSpec agent(order, op);
      CHECK_FALSE(verify_representation(agent, d).all_pass);
    }
}

TEST_CASE("WARP alone overclaims; WARP with groundedness is exact") {
  for (const TheoremId id : {TheoremId::Thm3, TheoremId::Thm5}) {
    for (int n = 2; n <= 3; ++n) {
      const auto report = verify_characterization(id, n);
      CHECK_FALSE(report.equivalence_holds);
      REQUIRE(report.literal.has_value());
      REQUIRE(report.repaired.has_value());
      CHECK_FALSE(report.literal->holds);
      CHECK(report.repaired->holds);
      CHECK(report.repaired->counterexamples.empty());
      CHECK(report.counts.at("repaired-mismatches") == 0);
      CHECK(report.counts.at("literal-mismatches") > 0);
      CHECK_FALSE(report.literal->counterexamples.empty());
    }

    // At two alternatives the literal reading fails on exactly the two
    // constant datasets: with every choice equal no WARP violation can form,
    // yet each chooses outside one singleton menu.
    const auto r2 = verify_characterization(id, 2);
    CHECK(r2.counts.at("literal-mismatches") == 2);
    REQUIRE(r2.literal->counterexamples.size() == 2);
    CHECK(r2.literal->counterexamples[0].dataset_choices == std::vector<AltId>{0, 0, 0});
    CHECK(r2.literal->counterexamples[1].dataset_choices == std::vector<AltId>{1, 1, 1});
  }
}

TEST_CASE("groundedness characterizes grounded-operator representability") {
  const auto r2 = verify_characterization(TheoremId::Thm4, 2);
  CHECK(r2.equivalence_holds);
  CHECK(r2.counts.at("axiom-positive") == 2);
  CHECK(r2.counts.at("representable") == 2);

  const auto r3 = verify_characterization(TheoremId::Thm4, 3);
  CHECK(r3.equivalence_holds);
  CHECK(r3.counts.at("axiom-positive") == 24);
  CHECK(r3.counts.at("mismatches") == 0);
}

TEST_CASE("intersecting representations recovers revealed preference and consideration") {
  for (int n = 2; n <= 3; ++n) {
    const auto p1 = verify_characterization(TheoremId::Prop1, n);
    CHECK(p1.equivalence_holds);
    CHECK(p1.counts.at("mismatches") == 0);
    const auto p2 = verify_characterization(TheoremId::Prop2, n);
    CHECK(p2.equivalence_holds);
    CHECK(p2.counts.at("mismatches") == 0);
  }
}

TEST_CASE("monotonicity equals both closure inclusions over all operators") {
  const auto r2 = verify_characterization(TheoremId::Prop4, 2);
  CHECK(r2.equivalence_holds);
  CHECK(r2.counts.at("tables") == 27);
  CHECK(r2.counts.at("monotone") == 11);
  CHECK(r2.counts.at("union-closed") == 11);
  CHECK(r2.counts.at("intersection-closed") == 11);
  CHECK(r2.counts.at("mismatches") == 0);

  const auto r3 = verify_characterization(TheoremId::Prop4, 3, 3);
  CHECK(r3.equivalence_holds);
  CHECK(r3.counts.at("tables") == 823543);
  CHECK(r3.counts.at("monotone") == r3.counts.at("union-closed"));
  CHECK(r3.counts.at("monotone") == r3.counts.at("intersection-closed"));
  CHECK(r3.counts.at("mismatches") == 0);
}

TEST_CASE("the seven-property battery agrees on every monotone operator") {
  const auto r2 = verify_characterization(TheoremId::LogicalConsistency, 2);
  CHECK(r2.equivalence_holds);
  CHECK(r2.counts.at("monotone-operators") == 11);
  CHECK(r2.counts.at("battery-agreements") == 11);
  CHECK(r2.counts.at("relabellings") == 2);
  CHECK(r2.counts.at("expected-relabellings") == 2);
  CHECK(r2.counts.at("alt-negation-disagreements") == 0);

  const auto r3 = verify_characterization(TheoremId::LogicalConsistency, 3);
  CHECK(r3.equivalence_holds);
  CHECK(r3.counts.at("relabellings") == 6);
  CHECK(r3.counts.at("alt-negation-disagreements") == 0);
}

TEST_CASE("oracle verdicts are byte-stable across thread counts") {
  const auto thm1_serial = verify_characterization(TheoremId::Thm1, 3, 1);
  const auto thm1_parallel = verify_characterization(TheoremId::Thm1, 3, 4);
  CHECK(characterization_report_json(thm1_serial) == characterization_report_json(thm1_parallel));

  const auto prop4_serial = verify_characterization(TheoremId::Prop4, 2, 1);
  const auto prop4_parallel = verify_characterization(TheoremId::Prop4, 2, 3);
  CHECK(characterization_report_json(prop4_serial) ==
        characterization_report_json(prop4_parallel));
}

TEST_CASE("exhaustive verification is capped at three alternatives") {
  CHECK_THROWS_AS(verify_characterization(TheoremId::Thm1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_characterization(TheoremId::Thm1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_characterization(TheoremId::Prop4, 9), std::invalid_argument);
}

TEST_CASE("theorem ids round trip through their names") {
  CHECK(to_string(TheoremId::Thm2) == "thm2");
  CHECK(to_string(TheoremId::LogicalConsistency) == "logical-consistency");
  CHECK(theorem_from_string("prop4") == TheoremId::Prop4);
  CHECK(theorem_from_string("thm5") == TheoremId::Thm5);
  CHECK_FALSE(theorem_from_string("thm9").has_value());
}

TEST_CASE("identification oracle agrees with the closed-form identification") {
  const auto fix = fixture(FixtureId::Example2);
  const auto oracle = identification_oracle(fix.dataset, ModelClass::Raic);
  CHECK(oracle.representation_count == 1);
  CHECK(oracle.preference_intersection.ranking() == std::vector<AltId>{0, 1, 2});
  REQUIRE(fix.agent.has_value());
  for (MenuMask m = 1; m <= 7; ++m)
    CHECK(oracle.consideration_intersection[m] == fix.agent->op.image_mask(m));

  CHECK_THROWS_AS(identification_oracle(fixture(FixtureId::Example1).dataset, ModelClass::Raic),
                  std::invalid_argument);
}

TEST_CASE("simulation is deterministic and honors its class axioms") {
  const Universe u = make_xyz();
  const auto a = simulate(11, ModelClass::Raic, u);
  const auto b = simulate(11, ModelClass::Raic, u);
  CHECK(serialize(document_from_dataset(a.dataset)) == serialize(document_from_dataset(b.dataset)));
  CHECK(serialize(document_from_agent(u, a.agent)) == serialize(document_from_agent(u, b.agent)));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto aic = simulate(seed, ModelClass::Aic, u);
    CHECK(check_nsc(aic.dataset).holds);
    CHECK(verify_representation(aic.agent, aic.dataset).all_pass);

    const auto raic = simulate(seed, ModelClass::Raic, u);
    CHECK(check_nbc(raic.dataset).holds);
    CHECK(check_cci(raic.dataset).holds);
    CHECK(check_nd(raic.dataset).holds);

    const auto graic = simulate(seed, ModelClass::Graic, u);
    CHECK(check_warp(graic.dataset).holds);
    CHECK(check_groundedness(graic.dataset).holds);

    const auto gmaic = simulate(seed, ModelClass::Gmaic, u);
    CHECK(check_warp(gmaic.dataset).holds);
    CHECK(check_groundedness(gmaic.dataset).holds);

    const auto gaic = simulate(seed, ModelClass::Gaic, u);
    CHECK(check_groundedness(gaic.dataset).holds);
    CHECK(verify_representation(gaic.agent, gaic.dataset).all_pass);
  }
}
