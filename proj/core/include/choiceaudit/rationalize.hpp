#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/core.hpp"

// Model evaluation and construction: run an agent on menus, derive its full
// choice function, verify it against data, and build a representing agent of
// a requested class from data that passes the class's axioms.
namespace choiceaudit {

enum class Scope { Total, ObservedOnly };

struct Representation {
  AgentSpec agent;
  Scope scope = Scope::ObservedOnly;
  std::vector<std::pair<MenuMask, bool>> verification;  // per observed menu, ascending
  bool all_pass = false;
};

// The preference maximum of the interpreted menu.
AltId evaluate_agent(const AgentSpec& agent, Menu m);

ChoiceDataset derive_choice_function(const AgentSpec& agent, const Universe& u);

Representation verify_representation(const AgentSpec& agent, const ChoiceDataset& d);

// NONE (no representation) is an empty `representation` plus a reason; the
// blocking axiom verdict is attached when an axiom failure caused it.
struct ConstructionResult {
  std::optional<Representation> representation;
  std::string failure;
  std::optional<AxiomVerdict> blocking;
  std::vector<std::string> notes;

  bool ok() const { return representation.has_value(); }
};

// AIC: revealed-consideration operator (monotonically completed on menus with
// no observed weak subset) plus the lexicographic linear extension of the
// one-step revealed relation. NONE when NSC fails.
ConstructionResult construct_aic(const ChoiceDataset& d);

// RAIC: relabelling operator w -> c({w}) plus the preference recovered from
// binary choices over singleton preimages. Requires every singleton and
// binary menu observed (throws otherwise). NONE when NBC ∧ CCI ∧ ND fails.
ConstructionResult construct_raic(const ChoiceDataset& d);

// GRAIC: identity operator plus the binary-choice order. Requires total data
// (throws otherwise). NONE unless WARP ∧ Groundedness hold.
ConstructionResult construct_graic(const ChoiceDataset& d);

// GAIC: operator {c(T)} on observed menus, T on unobserved ones, plus a
// lexicographic preference (any order represents). NONE when groundedness
// fails.
ConstructionResult construct_gaic(const ChoiceDataset& d);

// GMAIC: identity operator plus the lexicographic linear extension of the
// revealed relation. Requires total data (throws otherwise). NONE unless
// WARP ∧ Groundedness hold.
ConstructionResult construct_gmaic(const ChoiceDataset& d);

// Linear extension of an acyclic relation; ties broken by smallest index
// first. Throws std::invalid_argument when rel is cyclic.
StrictPreference lexicographic_extension(const StrictPreference& rel);

}  // namespace choiceaudit
