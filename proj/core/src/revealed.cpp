#include "choiceaudit/revealed.hpp"

#include <algorithm>
#include <stdexcept>

#include "choiceaudit/axioms.hpp"

namespace choiceaudit {

ClosureResult transitive_closure(const StrictPreference& rel) {
  const int n = rel.universe_size();
  std::vector<MenuMask> reach(static_cast<std::size_t>(n));
  for (AltId a = 0; a < n; ++a) reach[static_cast<std::size_t>(a)] = rel.row(a);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((reach[static_cast<std::size_t>(i)] >> k) & 1u)
        reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];
  bool cyclic = false;
  for (int i = 0; i < n; ++i) {
    if ((reach[static_cast<std::size_t>(i)] >> i) & 1u) {
      cyclic = true;
      reach[static_cast<std::size_t>(i)] &= ~(MenuMask{1} << i);  // never store reflexive pairs
    }
  }
  return ClosureResult{StrictPreference::from_rows(n, std::move(reach)), cyclic};
}

RevealedRelation revealed_one_step(const ChoiceDataset& d) {
  const int n = d.universe().size();
  std::vector<std::pair<AltId, AltId>> edges;
  std::map<std::pair<AltId, AltId>, std::vector<MenuPair>> provenance;
  const auto& obs = d.observations();
  for (const auto& [small, c_small] : obs)
    for (const auto& [large, c_large] : obs) {
      if (c_large == c_small || !Menu(small).strict_subset_of(Menu(large))) continue;
      edges.emplace_back(c_large, c_small);
      provenance[{c_large, c_small}].push_back(MenuPair{small, large});
    }
  StrictPreference one_step(n, edges);
  ClosureResult closed = transitive_closure(one_step);
  return RevealedRelation{std::move(one_step), std::move(closed.closure), closed.cyclic,
                          std::move(provenance)};
}

RevealedConsideration revealed_consideration(const ChoiceDataset& d) {
  const int n = d.universe().size();
  const MenuMask full = d.universe().full_mask();
  RevealedConsideration out;
  out.universe_size = n;
  out.table.assign(static_cast<std::size_t>(full) + 1, 0);
  // Mark every weak superset of each observed menu with that menu's choice,
  // ascending, so the table is built in one pass.
  for (const auto& [menu, choice] : d.observations())
    for_each_superset_within(menu, full,
                             [&](MenuMask t) { out.table[t] |= MenuMask{1} << choice; });
  return out;
}

namespace {

// Direct revelation for identity-operator classes: choosing x from an
// observed T reveals x over every other member of T.
StrictPreference directly_revealed(const ChoiceDataset& d) {
  std::vector<std::pair<AltId, AltId>> pairs;
  for (const auto& [menu, choice] : d.observations())
    for (AltId other : menu_members(Menu(menu)))
      if (other != choice) pairs.emplace_back(choice, other);
  return StrictPreference(d.universe().size(), pairs);
}

}  // namespace

IdentificationResult identify(const ChoiceDataset& d, ModelClass model) {
  const int n = d.universe().size();
  const MenuMask full = d.universe().full_mask();
  IdentificationResult out;
  out.model = model;

  const AuditReport report = audit(d);
  if (auto it = report.memberships.find(model); it != report.memberships.end())
    out.class_established = it->second.member;
  if (!out.class_established)
    out.notes.push_back("audit does not establish membership in " +
                        std::string(to_string(model)) + " on this data");

  switch (model) {
    case ModelClass::Aic: {
      RevealedRelation rel = revealed_one_step(d);
      out.preference_identified = !rel.cyclic && rel.closure.is_linear_order();
      if (out.preference_identified) out.preference = rel.closure;
      out.revealed_closure = std::move(rel.closure);
      out.consideration = revealed_consideration(d);
      if (!out.preference_identified)
        out.notes.push_back(
            "revealed preference closure is not a complete order; only its pairs "
            "are identified");
      break;
    }
    case ModelClass::Raic: {
      std::vector<AltId> singleton_choice(static_cast<std::size_t>(n));
      for (AltId w = 0; w < n; ++w) {
        const auto c = d.choice(MenuMask{1} << w);
        if (!c)
          throw std::invalid_argument(
              "identification under a doubly monotone operator needs every "
              "singleton menu observed");
        singleton_choice[static_cast<std::size_t>(w)] = *c;
      }
      std::vector<MenuMask> table(static_cast<std::size_t>(full) + 1, 0);
      for (MenuMask m = 1; m <= full; ++m)
        for (AltId w : menu_members(Menu(m)))
          table[m] |= MenuMask{1} << singleton_choice[static_cast<std::size_t>(w)];
      out.op = InterpretationOperator(n, std::move(table));
      RevealedRelation rel = revealed_one_step(d);
      out.preference_identified = !rel.cyclic && rel.closure.is_linear_order();
      if (out.preference_identified)
        out.preference = rel.closure;
      else
        out.notes.push_back(
            "revealed preference closure is not a complete order; the operator "
            "is identified but the preference is not");
      out.revealed_closure = std::move(rel.closure);
      break;
    }
    case ModelClass::Graic:
    case ModelClass::Gmaic: {
      out.op = InterpretationOperator::identity(n);
      StrictPreference direct = directly_revealed(d);
      out.preference_identified = direct.is_linear_order();
      if (out.preference_identified)
        out.preference = std::move(direct);
      else
        out.notes.push_back(
            "directly revealed relation is not a complete order; the identity "
            "operator is fixed but the preference is not identified");
      break;
    }
    case ModelClass::Gaic: {
      out.preference_identified = false;
      out.notes.push_back("preference is not identified under a grounded operator");
      const bool all_menus_fit = n <= 12;
      if (!all_menus_fit)
        out.notes.push_back("universe too large to list unobserved menus; bounds "
                            "cover observed menus only");
      if (all_menus_fit) {
        for (MenuMask m = 1; m <= full; ++m) {
          const auto c = d.choice(m);
          out.bounds.push_back(GaicMenuBounds{
              m, c.has_value(), c ? (MenuMask{1} << *c) : MenuMask{0}, m});
        }
      } else {
        for (const auto& [menu, choice] : d.observations())
          out.bounds.push_back(GaicMenuBounds{menu, true, MenuMask{1} << choice, menu});
      }
      break;
    }
    case ModelClass::Unclassified:
      throw std::invalid_argument("identification needs a concrete model class");
  }
  return out;
}

AlignmentReport alignment_report(const ChoiceDataset& d, const StrictPreference& dm) {
  if (dm.universe_size() != d.universe().size())
    throw std::invalid_argument("alignment: stated order covers a different universe");
  if (!dm.is_linear_order())
    throw std::invalid_argument("alignment: stated preference must be a strict linear order");
  RevealedRelation rel = revealed_one_step(d);
  AlignmentReport out;
  const int n = d.universe().size();
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b) {
      AlignmentEntry entry;
      entry.a = a;
      entry.b = b;
      const bool ab = rel.closure.prefers(a, b);
      const bool ba = rel.closure.prefers(b, a);
      if (ab && ba) {
        entry.status = PairAlignment::Misaligned;  // revealed both ways: cyclic data
      } else if (ab || ba) {
        const AltId winner = ab ? a : b;
        const AltId loser = ab ? b : a;
        entry.revealed = std::make_pair(winner, loser);
        entry.status = dm.prefers(winner, loser) ? PairAlignment::Aligned
                                                 : PairAlignment::Misaligned;
      } else {
        entry.status = PairAlignment::Undetermined;
      }
      switch (entry.status) {
        case PairAlignment::Aligned: ++out.aligned; break;
        case PairAlignment::Misaligned: ++out.misaligned; break;
        case PairAlignment::Undetermined: ++out.undetermined; break;
      }
      out.pairs.push_back(entry);
    }
  return out;
}

}  // namespace choiceaudit
