#include "choiceaudit/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace choiceaudit {

FixtureId fixture_id_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "example1") return FixtureId::Example1;
  if (lower == "example2") return FixtureId::Example2;
  throw std::invalid_argument("fixture: unknown id \"" + std::string(name) + "\"");
}

Fixture fixture(FixtureId id) {
  Universe u({"x", "y", "z"});
  switch (id) {
    case FixtureId::Example1: {
      // Partial record: binary menus plus the grand menu, no singletons.
      ChoiceDataset d(u, {{3, 0}, {5, 0}, {6, 1}, {7, 0}});
      return Fixture{std::move(d), std::nullopt};
    }
    case FixtureId::Example2: {
      // Total record generated by the cyclically relabelling agent.
      ChoiceDataset d(u, {{1, 1}, {2, 2}, {3, 1}, {4, 0}, {5, 0}, {6, 0}, {7, 0}});
      const AltId perm[] = {1, 2, 0};  // x->y, y->z, z->x
      AgentSpec agent(StrictPreference::from_ranking(std::array<AltId, 3>{0, 1, 2}),
                      InterpretationOperator::relabelling(3, perm), ModelClass::Raic);
      return Fixture{std::move(d), std::move(agent)};
    }
  }
  throw std::invalid_argument("fixture: unknown id");
}

}  // namespace choiceaudit
