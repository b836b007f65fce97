#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "choiceaudit/core.hpp"
#include "choiceaudit/operators.hpp"

// Testable consistency axioms over observed choice data, and the audit that
// maps axiom verdicts to model-class memberships.
namespace choiceaudit {

enum class AxiomId { Nsc, Nbc, Cci, Nd, Warp, Groundedness };

std::string_view to_string(AxiomId id);

// Cycle in the revealed relation: cycle[0] > cycle[1] > ... > cycle[m-1] >
// cycle[0], where each step i is backed by provenance[i] = (S, T) with S ⊂ T,
// c(T) = cycle[i], c(S) = cycle[(i+1) % m].
struct NscWitness {
  std::vector<AltId> cycle;
  std::vector<MenuPair> provenance;
};

// Ordered triple of distinct alternatives whose three binary menus violate
// premise -> conclusion.
struct NbcWitness {
  AltId x = 0, y = 0, z = 0;
};

// Observed chain small ⊂ mid ⊂ large with c(small) = c(large) ≠ c(mid).
struct CciWitness {
  MenuMask small = 0, mid = 0, large = 0;
};

// Two singletons with the same choice.
struct NdWitness {
  AltId x = 0, y = 0;
};

// c(menu_s) = x with y available in menu_s, yet c(menu_t) = y with x
// available in menu_t.
struct WarpWitness {
  MenuMask menu_s = 0, menu_t = 0;
  AltId x = 0, y = 0;
};

// Every observed menu whose choice lies outside the menu.
struct GroundednessWitness {
  std::vector<MenuMask> menus;
};

using AxiomWitness = std::variant<std::monostate, NscWitness, NbcWitness, CciWitness, NdWitness,
                                  WarpWitness, GroundednessWitness>;

struct AxiomVerdict {
  AxiomId axiom = AxiomId::Nsc;
  bool holds = true;
  bool vacuous = false;  // no quantifier instance was checkable on this data
  AxiomWitness witness;
};

AxiomVerdict check_nsc(const ChoiceDataset& d);
AxiomVerdict check_nbc(const ChoiceDataset& d);
AxiomVerdict check_cci(const ChoiceDataset& d);
AxiomVerdict check_nd(const ChoiceDataset& d);
AxiomVerdict check_warp(const ChoiceDataset& d);
AxiomVerdict check_groundedness(const ChoiceDataset& d);

// Re-derives the violation a failing verdict claims, directly against the
// dataset. True for every failing verdict produced by the checks above;
// passing verdicts replay trivially as true.
bool replay_witness(const ChoiceDataset& d, const AxiomVerdict& v);

struct ClassMembership {
  bool member = false;
  // True on partial data: the axioms are necessary conditions there, but the
  // characterization theorems only speak about total choice functions.
  bool necessary_conditions_only = false;
};

struct AuditReport {
  std::vector<AxiomVerdict> verdicts;  // NSC, NBC, CCI, ND, WARP, GROUNDEDNESS
  std::map<ModelClass, ClassMembership> memberships;
  // Set when WARP holds but groundedness fails: the characterization of
  // GRAIC/GMAIC by WARP alone does not survive ungrounded singleton choices,
  // so membership is granted only under WARP ∧ Groundedness.
  bool warp_groundedness_discrepancy = false;
  std::vector<std::string> notes;

  const AxiomVerdict& verdict(AxiomId id) const;
  bool all_hold() const;
};

AuditReport audit(const ChoiceDataset& d);

}  // namespace choiceaudit
