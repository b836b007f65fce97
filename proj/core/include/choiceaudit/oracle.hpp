#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choiceaudit/core.hpp"
#include "choiceaudit/revealed.hpp"

// Brute-force adjudication at small universe sizes: enumerate linear orders,
// operator classes, and total choice functions; decide each characterization
// claim by exhaustion; intersect representations to check identification.
namespace choiceaudit {

enum class OperatorClass {
  All,                       // every total operator table (n <= 3)
  Monotone,                  // pruned search (n <= 4)
  DoublyMonotone,            // exactly the n! relabellings (n <= 4)
  MonotoneIdempotent,        // monotone filtered by idempotence (n <= 4)
  DoublyMonotoneIdempotent,  // relabellings filtered by idempotence (n <= 4)
  Grounded,                  // consistency + singleton idempotence (n <= 3)
  GroundedMonotone,          // grounded filtered by monotonicity (n <= 3)
};

std::string_view to_string(OperatorClass c);

// Operator class searched for representations of each model class.
OperatorClass operator_class_for(ModelClass model);

// All n! strict linear orders, in lexicographic ranking order. n <= 8.
std::vector<StrictPreference> enumerate_linear_orders(const Universe& u);

// Streams every operator table of the class in canonical order. The span is
// indexed by menu mask (size 2^n) and only valid during the callback.
void for_each_operator_table(int n, OperatorClass c,
                             const std::function<void(std::span<const MenuMask>)>& fn);

std::vector<InterpretationOperator> enumerate_operators(const Universe& u, OperatorClass c);

// Total choice functions, indexed lexicographically by the tuple of choices
// in canonical menu order. n <= 3.
std::uint64_t total_choice_function_count(int n);
ChoiceDataset choice_function_from_index(const Universe& u, std::uint64_t index);
void for_each_choice_function(int n, const std::function<void(std::span<const AltId>)>& fn);

enum class TheoremId {
  Thm1,                // NSC  <=>  monotone representation
  Thm2,                // NBC ∧ CCI ∧ ND  <=>  doubly monotone representation
  Thm3,                // WARP (literal) vs WARP ∧ Groundedness (repaired)  <=>  GRAIC
  Thm4,                // Groundedness  <=>  grounded representation
  Thm5,                // WARP (literal) vs repaired  <=>  grounded monotone representation
  Prop1,               // preference intersection = revealed closure
  Prop2,               // consideration intersection = revealed consideration
  Prop4,               // monotone <=> union closed <=> intersection closed
  LogicalConsistency,  // seven-property battery agreement over monotone operators
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);  // "thm1", "prop4", ...

struct CounterexampleRecord {
  std::vector<AltId> dataset_choices;      // by canonical menu order, when relevant
  std::vector<MenuMask> operator_images;   // by mask from 1, when relevant
  std::vector<std::pair<std::string, bool>> verdicts;
  std::string detail;
};

struct DualOutcome {
  bool holds = false;
  std::uint64_t axiom_positives = 0;
  std::vector<CounterexampleRecord> counterexamples;
};

struct CharacterizationReport {
  TheoremId theorem = TheoremId::Thm1;
  int n = 0;
  std::map<std::string, std::uint64_t> counts;
  bool equivalence_holds = false;
  std::vector<CounterexampleRecord> counterexamples;
  // Thm3/Thm5 only: the WARP-alone and WARP ∧ Groundedness outcomes.
  std::optional<DualOutcome> literal;
  std::optional<DualOutcome> repaired;
};

// Exhaustive verdict at n in {2, 3}. Deterministic: the report is identical
// across runs and thread counts.
CharacterizationReport verify_characterization(TheoremId id, int n, int threads = 1);

struct IdentificationOracleResult {
  std::uint64_t representation_count = 0;
  StrictPreference preference_intersection;        // pairs present in every representation
  std::vector<MenuMask> consideration_intersection;  // per mask; full masks when count is 0
};

// Intersects all (order, operator) representations of a total dataset within
// the model class's operator search space. n <= 3.
IdentificationOracleResult identification_oracle(const ChoiceDataset& d, ModelClass model);

struct SimulationResult {
  AgentSpec agent;
  ChoiceDataset dataset;
};

// Samples an agent of the class uniformly (order first, operator second) and
// derives its choice function. Same seed, same bytes, on every platform.
SimulationResult simulate(std::uint64_t seed, ModelClass model, const Universe& u);

}  // namespace choiceaudit
