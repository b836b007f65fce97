#include "choiceaudit/rationalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "choiceaudit/revealed.hpp"

namespace choiceaudit {

AltId evaluate_agent(const AgentSpec& agent, Menu m) {
  if ((m.bits & ~mask_for(agent.op.universe_size())) || m.bits == 0)
    throw std::invalid_argument("evaluate: menu outside the agent's universe");
  const Menu interpreted(agent.op.image_mask(m.bits));
  const auto best = agent.preference.best_of(interpreted);
  if (!best) throw std::logic_error("linear order has no maximum on a nonempty menu");
  return *best;
}

ChoiceDataset derive_choice_function(const AgentSpec& agent, const Universe& u) {
  if (u.size() != agent.op.universe_size())
    throw std::invalid_argument("derive: universe size does not match the agent");
  std::vector<std::pair<MenuMask, AltId>> obs;
  const MenuMask full = u.full_mask();
  obs.reserve(full);
  for (MenuMask m = 1; m <= full; ++m) obs.emplace_back(m, evaluate_agent(agent, Menu(m)));
  return ChoiceDataset(u, std::move(obs));
}

Representation verify_representation(const AgentSpec& agent, const ChoiceDataset& d) {
  if (d.universe().size() != agent.op.universe_size())
    throw std::invalid_argument("verify: universe size does not match the agent");
  Representation rep{agent, d.is_total() ? Scope::Total : Scope::ObservedOnly, {}, true};
  for (const auto& [menu, choice] : d.observations()) {
    const bool pass = evaluate_agent(agent, Menu(menu)) == choice;
    rep.verification.emplace_back(menu, pass);
    rep.all_pass = rep.all_pass && pass;
  }
  return rep;
}

StrictPreference lexicographic_extension(const StrictPreference& rel) {
  const int n = rel.universe_size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (AltId a = 0; a < n; ++a)
    for (MenuMask bs = rel.row(a); bs != 0; bs &= bs - 1)
      ++indegree[static_cast<std::size_t>(std::countr_zero(bs))];
  std::vector<AltId> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    AltId pick = -1;
    for (AltId a = 0; a < n; ++a)
      if (!placed[static_cast<std::size_t>(a)] && indegree[static_cast<std::size_t>(a)] == 0) {
        pick = a;
        break;
      }
    if (pick < 0) throw std::invalid_argument("linear extension: relation is cyclic");
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (MenuMask bs = rel.row(pick); bs != 0; bs &= bs - 1)
      --indegree[static_cast<std::size_t>(std::countr_zero(bs))];
  }
  return StrictPreference::from_ranking(order);
}

namespace {

ConstructionResult none_result(std::string failure, std::optional<AxiomVerdict> blocking = {}) {
  ConstructionResult out;
  out.failure = std::move(failure);
  out.blocking = std::move(blocking);
  return out;
}

ConstructionResult finish(AgentSpec agent, const ChoiceDataset& d,
                          std::vector<std::string> notes) {
  Representation rep = verify_representation(agent, d);
  if (!rep.all_pass) {
    MenuMask bad = 0;
    for (const auto& [menu, pass] : rep.verification)
      if (!pass) {
        bad = menu;
        break;
      }
    ConstructionResult out = none_result(
        "constructed agent does not reproduce the observed choice at menu " +
        menu_to_string(d.universe(), Menu(bad)));
    out.notes = std::move(notes);
    out.notes.push_back(
        "the class axioms hold on this data, yet the construction fails: the "
        "characterization's sufficiency argument does not cover this dataset");
    return out;
  }
  ConstructionResult out;
  out.representation = std::move(rep);
  out.notes = std::move(notes);
  return out;
}

}  // namespace

ConstructionResult construct_aic(const ChoiceDataset& d) {
  const AxiomVerdict nsc = check_nsc(d);
  if (!nsc.holds)
    return none_result("revealed relation is cyclic: no monotone-operator agent exists", nsc);

  const int n = d.universe().size();
  const MenuMask full = d.universe().full_mask();
  RevealedRelation rel = revealed_one_step(d);
  const StrictPreference order = lexicographic_extension(rel.one_step);
  const std::vector<AltId> ranking = order.ranking();
  std::vector<int> rank_of(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank_of[static_cast<std::size_t>(ranking[static_cast<std::size_t>(i)])] = i;

  std::vector<MenuMask> table = revealed_consideration(d).table;
  // Menus with no observed weak subset get the order-minimal choice among
  // their observed supersets (never above any such superset's own choice), or
  // the first alternative when nothing above them was observed either.
  for (MenuMask m = 1; m <= full; ++m) {
    if (table[m] != 0) continue;
    AltId fill = 0;
    int worst = -1;
    for (const auto& [menu, choice] : d.observations())
      if ((m & ~menu) == 0 && rank_of[static_cast<std::size_t>(choice)] > worst) {
        worst = rank_of[static_cast<std::size_t>(choice)];
        fill = choice;
      }
    table[m] = MenuMask{1} << fill;
  }
  // Union propagation in ascending mask order restores monotonicity.
  for (MenuMask m = 1; m <= full; ++m)
    for (MenuMask bs = m; bs != 0; bs &= bs - 1)
      table[m] |= table[m & ~(bs & (MenuMask{0} - bs))];

  AgentSpec agent(order, InterpretationOperator(n, std::move(table)), ModelClass::Aic);
  std::vector<std::string> notes;
  if (!d.is_total())
    notes.push_back("dataset is partial: unobserved menus were completed monotonically");
  return finish(std::move(agent), d, std::move(notes));
}

ConstructionResult construct_raic(const ChoiceDataset& d) {
  const int n = d.universe().size();
  for (AltId w = 0; w < n; ++w)
    if (!d.choice(MenuMask{1} << w))
      throw std::invalid_argument("doubly monotone construction needs every singleton observed");
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b)
      if (!d.choice((MenuMask{1} << a) | (MenuMask{1} << b)))
        throw std::invalid_argument("doubly monotone construction needs every binary menu observed");

  for (const AxiomVerdict& v : {check_nbc(d), check_cci(d), check_nd(d)})
    if (!v.holds)
      return none_result(std::string(to_string(v.axiom)) +
                             " fails: no doubly-monotone-operator agent exists",
                         v);

  // Singleton choices define the relabelling; ND makes it injective.
  std::vector<AltId> sigma(static_cast<std::size_t>(n));
  std::vector<AltId> preimage(static_cast<std::size_t>(n), -1);
  for (AltId w = 0; w < n; ++w) {
    sigma[static_cast<std::size_t>(w)] = *d.choice(MenuMask{1} << w);
    preimage[static_cast<std::size_t>(sigma[static_cast<std::size_t>(w)])] = w;
  }

  // Tournament over singleton preimages recovers the preference.
  std::vector<std::pair<AltId, AltId>> pairs;
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b) {
      const AltId ua = preimage[static_cast<std::size_t>(a)];
      const AltId ub = preimage[static_cast<std::size_t>(b)];
      const AltId winner = *d.choice((MenuMask{1} << ua) | (MenuMask{1} << ub));
      if (winner == a)
        pairs.emplace_back(a, b);
      else if (winner == b)
        pairs.emplace_back(b, a);
      else
        return none_result(
            "binary tournament is undecided between " + d.universe().label(a) + " and " +
            d.universe().label(b) +
            ": the choice over their singleton preimages selects neither, so no "
            "doubly-monotone-operator agent exists");
    }
  StrictPreference order(n, pairs);
  if (!order.is_linear_order())
    return none_result("recovered binary tournament is not transitive");

  AgentSpec agent(std::move(order), InterpretationOperator::relabelling(n, sigma),
                  ModelClass::Raic);
  return finish(std::move(agent), d, {});
}

namespace {

ConstructionResult construct_identity_class(const ChoiceDataset& d, ModelClass tag) {
  if (!d.is_total())
    throw std::invalid_argument("identity-operator construction needs a total dataset");
  const AxiomVerdict warp = check_warp(d);
  const AxiomVerdict grounded = check_groundedness(d);
  if (!warp.holds)
    return none_result("WARP fails: no identity-operator agent exists", warp);
  if (!grounded.holds) {
    ConstructionResult out = none_result(
        "WARP holds but some observed choice leaves its menu: no identity-operator "
        "agent exists",
        grounded);
    out.notes.push_back(
        "the class's stated characterization uses WARP alone; groundedness is "
        "additionally required here, since an identity operator can only ever "
        "choose inside the menu");
    return out;
  }

  const int n = d.universe().size();
  StrictPreference order = [&] {
    if (tag == ModelClass::Graic) {
      // Binary choices decide every pair directly.
      std::vector<std::pair<AltId, AltId>> pairs;
      for (AltId a = 0; a < n; ++a)
        for (AltId b = a + 1; b < n; ++b) {
          const AltId winner = *d.choice((MenuMask{1} << a) | (MenuMask{1} << b));
          pairs.emplace_back(winner, winner == a ? b : a);
        }
      return StrictPreference(n, pairs);
    }
    return lexicographic_extension(revealed_one_step(d).one_step);
  }();
  if (!order.is_linear_order())
    return none_result("recovered binary relation is not a linear order");
  AgentSpec agent(std::move(order), InterpretationOperator::identity(n), tag);
  return finish(std::move(agent), d, {});
}

}  // namespace

ConstructionResult construct_graic(const ChoiceDataset& d) {
  return construct_identity_class(d, ModelClass::Graic);
}

ConstructionResult construct_gmaic(const ChoiceDataset& d) {
  return construct_identity_class(d, ModelClass::Gmaic);
}

ConstructionResult construct_gaic(const ChoiceDataset& d) {
  const AxiomVerdict grounded = check_groundedness(d);
  if (!grounded.holds)
    return none_result("some observed choice leaves its menu: no grounded-operator "
                       "agent exists",
                       grounded);
  const int n = d.universe().size();
  const MenuMask full = d.universe().full_mask();
  std::vector<MenuMask> table(static_cast<std::size_t>(full) + 1, 0);
  for (MenuMask m = 1; m <= full; ++m) {
    const auto c = d.choice(m);
    table[m] = c ? (MenuMask{1} << *c) : m;
  }
  std::vector<AltId> identity_ranking(static_cast<std::size_t>(n));
  for (AltId a = 0; a < n; ++a) identity_ranking[static_cast<std::size_t>(a)] = a;
  AgentSpec agent(StrictPreference::from_ranking(identity_ranking),
                  InterpretationOperator(n, std::move(table)), ModelClass::Gaic);
  std::vector<std::string> notes;
  notes.push_back("preference is arbitrary for this class: any linear order represents");
  if (!d.is_total())
    notes.push_back("dataset is partial: unobserved menus interpret as themselves");
  return finish(std::move(agent), d, std::move(notes));
}

}  // namespace choiceaudit
