#pragma once

#include <optional>
#include <string_view>

#include "choiceaudit/core.hpp"

namespace choiceaudit {

// Canned datasets used across tests and documentation.
//
// Example1: partial data over {x,y,z} with four observed menus; satisfies NSC
// and reveals exactly x over y.
// Example2: total data over {x,y,z} generated by the cyclic relabelling
// operator x->y, y->z, z->x under the order x > y > z; every singleton choice
// is ungrounded. Ships with the generating agent.
enum class FixtureId { Example1, Example2 };

FixtureId fixture_id_from_string(std::string_view name);  // throws on unknown name

struct Fixture {
  ChoiceDataset dataset;
  std::optional<AgentSpec> agent;  // present when the fixture was generated by a model
};

Fixture fixture(FixtureId id);

}  // namespace choiceaudit
