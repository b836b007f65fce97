#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choiceaudit/core.hpp"
#include "choiceaudit/operators.hpp"

// Identification from observed data: the revealed preference relation, its
// transitive closure, revealed consideration sets, class-specific
// identification, and alignment against a decision maker's stated ranking.
namespace choiceaudit {

struct ClosureResult {
  StrictPreference closure;  // reflexive pairs are never stored
  bool cyclic = false;       // some alternative reaches itself
};

ClosureResult transitive_closure(const StrictPreference& rel);

// One-step revealed preference: a > b when some observed S ⊂ T has c(T) = a,
// c(S) = b, a ≠ b. Provenance lists every generating (S, T) pair in ascending
// order.
struct RevealedRelation {
  StrictPreference one_step;
  StrictPreference closure;
  bool cyclic = false;
  std::map<std::pair<AltId, AltId>, std::vector<MenuPair>> provenance;
};

RevealedRelation revealed_one_step(const ChoiceDataset& d);

// Revealed consideration: table[T] = { x : some observed S ⊆ T has c(S) = x }.
// Defined for every menu; empty on menus with no observed weak subset.
struct RevealedConsideration {
  int universe_size = 0;
  std::vector<MenuMask> table;  // indexed by mask, size 2^n, slot 0 zero

  MenuMask at(MenuMask m) const { return table[m]; }
};

RevealedConsideration revealed_consideration(const ChoiceDataset& d);

struct GaicMenuBounds {
  MenuMask menu = 0;
  bool observed = false;
  MenuMask lower = 0;  // {c(menu)} when observed
  MenuMask upper = 0;  // the menu itself
};

// What the data pins down under each model class. For AIC the identified
// objects are the closure and the consideration table (sharp bounds); for
// RAIC the operator and preference are unique; for GRAIC/GMAIC the operator
// is the identity and the preference is revealed directly; for GAIC only
// per-menu operator bounds are identified and the preference is not.
struct IdentificationResult {
  ModelClass model = ModelClass::Unclassified;
  bool class_established = false;  // per audit on this data
  bool preference_identified = false;
  std::optional<StrictPreference> preference;
  std::optional<InterpretationOperator> op;
  std::optional<StrictPreference> revealed_closure;   // AIC
  std::optional<RevealedConsideration> consideration; // AIC
  std::vector<GaicMenuBounds> bounds;                 // GAIC
  std::vector<std::string> notes;
};

IdentificationResult identify(const ChoiceDataset& d, ModelClass model);

enum class PairAlignment { Aligned, Misaligned, Undetermined };

struct AlignmentEntry {
  AltId a = 0, b = 0;  // a < b by index
  PairAlignment status = PairAlignment::Undetermined;
  // Revealed direction when one exists: (winner, loser) under the closure.
  std::optional<std::pair<AltId, AltId>> revealed;
};

struct AlignmentReport {
  std::vector<AlignmentEntry> pairs;  // all unordered pairs, ascending (a, b)
  int aligned = 0;
  int misaligned = 0;
  int undetermined = 0;
};

// Compares revealed preference against a stated strict linear order. A pair
// revealed in both directions (cyclic data) reports as misaligned. Throws if
// dm is not a linear order over the same universe size.
AlignmentReport alignment_report(const ChoiceDataset& d, const StrictPreference& dm);

}  // namespace choiceaudit
