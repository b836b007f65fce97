#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "choiceaudit/fixtures.hpp"
#include "choiceaudit/rationalize.hpp"

using namespace choiceaudit;

namespace {

Universe xyz() { return Universe({"x", "y", "z"}); }

// Grounded, order-consistent total data: every menu picks its x>y>z maximum.
ChoiceDataset rational() {
  return ChoiceDataset(xyz(), {{1, 0}, {2, 1}, {3, 0}, {4, 2}, {5, 0}, {6, 1}, {7, 0}});
}

// Singleton choices honest, every other menu stubbornly picks z.
ChoiceDataset stubborn_z() {
  return ChoiceDataset(xyz(), {{1, 0}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2}});
}

}  // namespace

TEST_CASE("evaluating an agent maximizes over the interpreted menu") {
  const auto fix = fixture(FixtureId::Example2);
  REQUIRE(fix.agent.has_value());
  const AgentSpec& agent = *fix.agent;

  CHECK(evaluate_agent(agent, Menu(1)) == 1);  // {x} reads as {y}
  CHECK(evaluate_agent(agent, Menu(7)) == 0);
  CHECK_THROWS_AS(evaluate_agent(agent, Menu(9)), std::invalid_argument);

  const auto derived = derive_choice_function(agent, fix.dataset.universe());
  CHECK(derived.is_total());
  REQUIRE(derived.observation_count() == 7);
  for (const auto& [menu, choice] : fix.dataset.observations())
    CHECK(derived.choice(menu) == choice);

  const auto rep = verify_representation(agent, fix.dataset);
  CHECK(rep.all_pass);
  CHECK(rep.scope == Scope::Total);
  CHECK(rep.verification.size() == 7);
}

TEST_CASE("lexicographic linear extension") {
  const StrictPreference xz(3, {{0, 2}});
  CHECK(lexicographic_extension(xz).ranking() == std::vector<AltId>{0, 1, 2});
  const StrictPreference yx(3, {{1, 0}});
  CHECK(lexicographic_extension(yx).ranking() == std::vector<AltId>{1, 0, 2});
  const StrictPreference cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(lexicographic_extension(cyc), std::invalid_argument);
}

TEST_CASE("monotone-operator construction completes partial data") {
  const auto d = fixture(FixtureId::Example1).dataset;
  const auto result = construct_aic(d);
  REQUIRE(result.ok());
  const Representation& rep = *result.representation;
  CHECK(rep.all_pass);
  CHECK(rep.scope == Scope::ObservedOnly);
  CHECK(rep.agent.tag == ModelClass::Aic);
  CHECK(rep.agent.preference.ranking() == std::vector<AltId>{0, 1, 2});

  const std::vector<MenuMask> expected = {0, 1, 2, 3, 2, 3, 2, 3};
  for (MenuMask m = 1; m <= 7; ++m) CHECK(rep.agent.op.image_mask(m) == expected[m]);
  REQUIRE_FALSE(result.notes.empty());
  CHECK(result.notes[0].find("partial") != std::string::npos);
}

TEST_CASE("monotone-operator construction refuses cyclic revealed preference") {
  const ChoiceDataset d(xyz(), {{1, 1}, {3, 0}, {4, 0}, {6, 1}});
  const auto result = construct_aic(d);
  CHECK_FALSE(result.ok());
  REQUIRE(result.blocking.has_value());
  CHECK(result.blocking->axiom == AxiomId::Nsc);
  CHECK_FALSE(result.blocking->holds);
}

TEST_CASE("relabelling construction recovers the generating agent") {
  const auto fix = fixture(FixtureId::Example2);
  const auto result = construct_raic(fix.dataset);
  REQUIRE(result.ok());
  const Representation& rep = *result.representation;
  CHECK(rep.all_pass);
  CHECK(rep.scope == Scope::Total);
  CHECK(rep.agent.preference.ranking() == std::vector<AltId>{0, 1, 2});
  REQUIRE(fix.agent.has_value());
  CHECK(rep.agent.op == fix.agent->op);
}

TEST_CASE("relabelling construction needs singletons and binaries") {
  CHECK_THROWS_AS(construct_raic(fixture(FixtureId::Example1).dataset), std::invalid_argument);
  const ChoiceDataset no_binary(xyz(), {{1, 0}, {2, 1}, {4, 2}, {3, 0}, {5, 0}});
  CHECK_THROWS_AS(construct_raic(no_binary), std::invalid_argument);
}

TEST_CASE("an undecided binary tournament blocks the relabelling construction") {
  // Singleton choices are honest, yet {x,y} chooses z: the tournament between
  // x and y selects neither, although NBC, CCI, and ND all hold.
  const auto result = construct_raic(stubborn_z());
  CHECK_FALSE(result.ok());
  CHECK(result.failure.find("undecided") != std::string::npos);
  CHECK_FALSE(result.blocking.has_value());  // no single axiom is to blame
}

TEST_CASE("a binary-condition violation blocks the relabelling construction") {
  const ChoiceDataset d(xyz(), {{1, 0}, {2, 1}, {4, 2}, {3, 0}, {6, 1}, {5, 2}});
  const auto result = construct_raic(d);
  CHECK_FALSE(result.ok());
  REQUIRE(result.blocking.has_value());
  CHECK(result.blocking->axiom == AxiomId::Nbc);
}

TEST_CASE("identity-operator constructions on order-consistent data") {
  const auto graic = construct_graic(rational());
  REQUIRE(graic.ok());
  CHECK(graic.representation->agent.preference.ranking() == std::vector<AltId>{0, 1, 2});
  CHECK(graic.representation->agent.op == InterpretationOperator::identity(3));
  CHECK(graic.representation->scope == Scope::Total);

  const auto gmaic = construct_gmaic(rational());
  REQUIRE(gmaic.ok());
  CHECK(gmaic.representation->agent.preference.ranking() == std::vector<AltId>{0, 1, 2});
  CHECK(gmaic.representation->agent.op == InterpretationOperator::identity(3));
}

TEST_CASE("identity-operator constructions reject relabelled or ungrounded data") {
  const auto warp_blocked = construct_graic(fixture(FixtureId::Example2).dataset);
  CHECK_FALSE(warp_blocked.ok());
  REQUIRE(warp_blocked.blocking.has_value());
  CHECK(warp_blocked.blocking->axiom == AxiomId::Warp);

  // WARP alone is not enough: ungrounded choices sink the identity operator.
  const auto grounded_blocked = construct_graic(stubborn_z());
  CHECK_FALSE(grounded_blocked.ok());
  REQUIRE(grounded_blocked.blocking.has_value());
  CHECK(grounded_blocked.blocking->axiom == AxiomId::Groundedness);
  REQUIRE_FALSE(grounded_blocked.notes.empty());
  CHECK(grounded_blocked.notes[0].find("WARP alone") != std::string::npos);

  CHECK_THROWS_AS(construct_graic(fixture(FixtureId::Example1).dataset), std::invalid_argument);
  CHECK_THROWS_AS(construct_gmaic(fixture(FixtureId::Example1).dataset), std::invalid_argument);
}

TEST_CASE("grounded-operator construction reads menus literally") {
  const ChoiceDataset partial(xyz(), {{3, 0}, {6, 1}});
  const auto result = construct_gaic(partial);
  REQUIRE(result.ok());
  const Representation& rep = *result.representation;
  CHECK(rep.scope == Scope::ObservedOnly);
  CHECK(rep.agent.op.image_mask(3) == 1u);
  CHECK(rep.agent.op.image_mask(6) == 2u);
  CHECK(rep.agent.op.image_mask(7) == 7u);  // unobserved menus read as themselves
  CHECK(rep.agent.op.image_mask(5) == 5u);
  REQUIRE(result.notes.size() == 2);
  CHECK(result.notes[0].find("arbitrary") != std::string::npos);
  CHECK(result.notes[1].find("partial") != std::string::npos);

  const auto blocked = construct_gaic(fixture(FixtureId::Example2).dataset);
  CHECK_FALSE(blocked.ok());
  REQUIRE(blocked.blocking.has_value());
  CHECK(blocked.blocking->axiom == AxiomId::Groundedness);
}
