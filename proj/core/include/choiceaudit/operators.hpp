#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "choiceaudit/core.hpp"

// Structural properties of interpretation operators: monotonicity, closure
// laws, the seven-property consistency battery, idempotence, groundedness.
namespace choiceaudit {

struct MenuPair {
  MenuMask first = 0;
  MenuMask second = 0;
  bool operator==(const MenuPair&) const = default;
};

struct FlagWithWitness {
  bool holds = false;
  std::optional<MenuPair> witness;  // first violating instance, if any
};

struct ClosureFlags {
  FlagWithWitness union_closed;         // I(S) ∪ I(T) ⊆ I(S ∪ T)
  FlagWithWitness intersection_closed;  // I(S ∩ T) ⊆ I(S) ∩ I(T), S ∩ T nonempty
};

struct GroundedFlags {
  FlagWithWitness grounded_consistent;   // S ⊆ T implies I(S) ∩ I(X\T) = ∅
  FlagWithWitness singleton_idempotent;  // I(I({x})) = I({x})
};

// All flags a classification can report. Witnesses are keyed by flag name and
// record the first violating instance in the flag's canonical scan order.
struct OperatorPropertyReport {
  bool monotone = false;
  bool union_closed = false;
  bool intersection_closed = false;
  bool doubly_monotone = false;
  bool double_intersection_closed = false;
  bool double_union_closed = false;
  bool consistent = false;
  bool negation_eliminating = false;
  bool injective = false;
  bool surjective = false;
  bool relabelling = false;
  bool idempotent = false;
  bool singleton_idempotent = false;
  bool grounded_consistent = false;
  bool identity = false;

  // True when the seven battery flags (consistent, double_intersection_closed,
  // doubly_monotone, negation_eliminating, injective, surjective, relabelling)
  // agree pairwise. For monotone operators they are provably equivalent.
  bool battery_agrees = false;

  std::optional<std::vector<AltId>> relabelling_permutation;
  std::map<std::string, MenuPair> witnesses;
};

FlagWithWitness check_monotone(const InterpretationOperator& op);
ClosureFlags check_closure_properties(const InterpretationOperator& op);
FlagWithWitness check_double_monotonicity(const InterpretationOperator& op);
FlagWithWitness check_idempotence(const InterpretationOperator& op);
GroundedFlags check_grounded(const InterpretationOperator& op);

// Evaluates the seven equivalent properties of monotone operators and reports
// whether they agree. Throws std::invalid_argument on non-monotone input,
// since the equivalence is only claimed under monotonicity.
OperatorPropertyReport consistency_battery(const InterpretationOperator& op);

// Populates every flag (no monotonicity precondition).
OperatorPropertyReport classify_operator(const InterpretationOperator& op);

// Table-level kernels shared with the enumeration oracle. `images` is indexed
// by menu mask (size 2^n, slot 0 zero). Each returns the first violation in
// its canonical scan order through the optional witness.
namespace detail {

bool k_monotone(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_union_closed(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_intersection_closed(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_doubly_monotone(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_consistent(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_double_intersection_closed(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_double_union_closed(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_negation_eliminating(std::span<const MenuMask> images, int n, MenuPair* w);
// Alternative complement convention: also evaluates the S = X instance via
// I(∅) = ∅, which additionally requires I(X) = X.
bool k_negation_eliminating_incl_full(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_injective(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_surjective(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_idempotent(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_singleton_idempotent(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_grounded_consistent(std::span<const MenuMask> images, int n, MenuPair* w);
bool k_identity(std::span<const MenuMask> images, int n, MenuPair* w);
std::optional<std::vector<AltId>> k_relabelling(std::span<const MenuMask> images, int n,
                                                MenuPair* w);

}  // namespace detail

}  // namespace choiceaudit
