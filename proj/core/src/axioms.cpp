#include "choiceaudit/axioms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "choiceaudit/revealed.hpp"

namespace choiceaudit {

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::Nsc: return "NSC";
    case AxiomId::Nbc: return "NBC";
    case AxiomId::Cci: return "CCI";
    case AxiomId::Nd: return "ND";
    case AxiomId::Warp: return "WARP";
    case AxiomId::Groundedness: return "GROUNDEDNESS";
  }
  return "NSC";
}

namespace {

// Shortest cycle through the smallest alternative that lies on any cycle.
// BFS visits successors in ascending index order, so path reconstruction is
// deterministic.
NscWitness extract_cycle(const RevealedRelation& rel, int n) {
  std::vector<MenuMask> reach(static_cast<std::size_t>(n));
  for (AltId a = 0; a < n; ++a) reach[static_cast<std::size_t>(a)] = rel.one_step.row(a);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((reach[static_cast<std::size_t>(i)] >> k) & 1u)
        reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];

  AltId v0 = -1;
  for (int a = 0; a < n; ++a)
    if ((reach[static_cast<std::size_t>(a)] >> a) & 1u) {
      v0 = a;
      break;
    }
  if (v0 < 0) throw std::logic_error("cycle extraction called on acyclic relation");

  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<AltId> parent(static_cast<std::size_t>(n), -1);
  std::deque<AltId> queue{v0};
  dist[static_cast<std::size_t>(v0)] = 0;
  while (!queue.empty()) {
    const AltId u = queue.front();
    queue.pop_front();
    for (MenuMask bs = rel.one_step.row(u); bs != 0; bs &= bs - 1) {
      const AltId v = std::countr_zero(bs);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }

  AltId tail = -1;
  for (AltId u = 0; u < n; ++u) {
    if (dist[static_cast<std::size_t>(u)] < 0 || !rel.one_step.prefers(u, v0)) continue;
    if (tail < 0 || dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(tail)])
      tail = u;
  }
  if (tail < 0) throw std::logic_error("no closing edge for detected cycle");

  NscWitness w;
  for (AltId u = tail; u >= 0; u = parent[static_cast<std::size_t>(u)]) w.cycle.push_back(u);
  std::reverse(w.cycle.begin(), w.cycle.end());
  const std::size_t m = w.cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    const AltId a = w.cycle[i];
    const AltId b = w.cycle[(i + 1) % m];
    w.provenance.push_back(rel.provenance.at({a, b}).front());
  }
  return w;
}

}  // namespace

AxiomVerdict check_nsc(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Nsc;
  bool nested_pair_seen = false;
  const auto& obs = d.observations();
  for (std::size_t i = 0; i < obs.size() && !nested_pair_seen; ++i)
    for (std::size_t j = 0; j < obs.size(); ++j)
      if (i != j && Menu(obs[i].first).strict_subset_of(Menu(obs[j].first))) {
        nested_pair_seen = true;
        break;
      }
  v.vacuous = !nested_pair_seen;
  RevealedRelation rel = revealed_one_step(d);
  if (rel.cyclic) {
    v.holds = false;
    v.witness = extract_cycle(rel, d.universe().size());
  }
  return v;
}

AxiomVerdict check_nbc(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Nbc;
  v.vacuous = true;
  const int n = d.universe().size();
  const auto binary = [&](AltId a, AltId b) {
    return d.choice((MenuMask{1} << a) | (MenuMask{1} << b));
  };
  for (AltId x = 0; x < n; ++x)
    for (AltId y = 0; y < n; ++y)
      for (AltId z = 0; z < n; ++z) {
        if (x == y || x == z || y == z) continue;
        const auto cxy = binary(x, y), cyz = binary(y, z), cxz = binary(x, z);
        if (!cxy || !cyz || !cxz) continue;
        v.vacuous = false;
        if (*cxy != *cyz && *cxz != *cyz && *cxy != *cxz) {
          v.holds = false;
          v.witness = NbcWitness{x, y, z};
          return v;
        }
      }
  return v;
}

AxiomVerdict check_cci(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Cci;
  v.vacuous = true;
  const auto& obs = d.observations();
  for (const auto& [small, c_small] : obs)
    for (const auto& [mid, c_mid] : obs) {
      if (!Menu(small).strict_subset_of(Menu(mid))) continue;
      for (const auto& [large, c_large] : obs) {
        if (!Menu(mid).strict_subset_of(Menu(large))) continue;
        v.vacuous = false;
        if (c_small == c_large && c_mid != c_small) {
          v.holds = false;
          v.witness = CciWitness{small, mid, large};
          return v;
        }
      }
    }
  return v;
}

AxiomVerdict check_nd(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Nd;
  const int n = d.universe().size();
  int singletons = 0;
  for (AltId x = 0; x < n; ++x)
    if (d.choice(MenuMask{1} << x)) ++singletons;
  v.vacuous = singletons < 2;
  for (AltId x = 0; x < n; ++x) {
    const auto cx = d.choice(MenuMask{1} << x);
    if (!cx) continue;
    for (AltId y = x + 1; y < n; ++y) {
      const auto cy = d.choice(MenuMask{1} << y);
      if (cy && *cx == *cy) {
        v.holds = false;
        v.witness = NdWitness{x, y};
        return v;
      }
    }
  }
  return v;
}

AxiomVerdict check_warp(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Warp;
  const auto& obs = d.observations();
  v.vacuous = obs.size() < 2;
  // Descending menu scan: violations on large menus (where every alternative
  // is available) surface first.
  for (auto s = obs.rbegin(); s != obs.rend(); ++s)
    for (auto t = obs.rbegin(); t != obs.rend(); ++t) {
      const AltId x = s->second, y = t->second;
      if (x == y) continue;
      if (Menu(s->first).contains(y) && Menu(t->first).contains(x)) {
        v.holds = false;
        v.witness = WarpWitness{s->first, t->first, x, y};
        return v;
      }
    }
  return v;
}

AxiomVerdict check_groundedness(const ChoiceDataset& d) {
  AxiomVerdict v;
  v.axiom = AxiomId::Groundedness;
  v.vacuous = d.observations().empty();
  GroundednessWitness w;
  for (const auto& [menu, choice] : d.observations())
    if (!Menu(menu).contains(choice)) w.menus.push_back(menu);
  if (!w.menus.empty()) {
    v.holds = false;
    v.witness = std::move(w);
  }
  return v;
}

bool replay_witness(const ChoiceDataset& d, const AxiomVerdict& v) {
  if (v.holds) return true;
  switch (v.axiom) {
    case AxiomId::Nsc: {
      const auto* w = std::get_if<NscWitness>(&v.witness);
      if (w == nullptr || w->cycle.size() < 2 || w->provenance.size() != w->cycle.size())
        return false;
      const std::size_t m = w->cycle.size();
      for (std::size_t i = 0; i < m; ++i) {
        const AltId a = w->cycle[i];
        const AltId b = w->cycle[(i + 1) % m];
        const auto [small, large] = w->provenance[i];
        const auto c_small = d.choice(small), c_large = d.choice(large);
        if (a == b || !Menu(small).strict_subset_of(Menu(large))) return false;
        if (!c_small || !c_large || *c_large != a || *c_small != b) return false;
      }
      return true;
    }
    case AxiomId::Nbc: {
      const auto* w = std::get_if<NbcWitness>(&v.witness);
      if (w == nullptr) return false;
      const auto [x, y, z] = *w;
      if (x == y || x == z || y == z) return false;
      const auto cxy = d.choice((MenuMask{1} << x) | (MenuMask{1} << y));
      const auto cyz = d.choice((MenuMask{1} << y) | (MenuMask{1} << z));
      const auto cxz = d.choice((MenuMask{1} << x) | (MenuMask{1} << z));
      if (!cxy || !cyz || !cxz) return false;
      return *cxy != *cyz && *cxz != *cyz && *cxy != *cxz;
    }
    case AxiomId::Cci: {
      const auto* w = std::get_if<CciWitness>(&v.witness);
      if (w == nullptr) return false;
      if (!Menu(w->small).strict_subset_of(Menu(w->mid)) ||
          !Menu(w->mid).strict_subset_of(Menu(w->large)))
        return false;
      const auto cs = d.choice(w->small), cm = d.choice(w->mid), cl = d.choice(w->large);
      return cs && cm && cl && *cs == *cl && *cm != *cs;
    }
    case AxiomId::Nd: {
      const auto* w = std::get_if<NdWitness>(&v.witness);
      if (w == nullptr || w->x == w->y) return false;
      const auto cx = d.choice(MenuMask{1} << w->x), cy = d.choice(MenuMask{1} << w->y);
      return cx && cy && *cx == *cy;
    }
    case AxiomId::Warp: {
      const auto* w = std::get_if<WarpWitness>(&v.witness);
      if (w == nullptr || w->x == w->y) return false;
      const auto cs = d.choice(w->menu_s), ct = d.choice(w->menu_t);
      return cs && ct && *cs == w->x && *ct == w->y && Menu(w->menu_s).contains(w->y) &&
             Menu(w->menu_t).contains(w->x);
    }
    case AxiomId::Groundedness: {
      const auto* w = std::get_if<GroundednessWitness>(&v.witness);
      if (w == nullptr || w->menus.empty()) return false;
      for (MenuMask m : w->menus) {
        const auto c = d.choice(m);
        if (!c || Menu(m).contains(*c)) return false;
      }
      return true;
    }
  }
  return false;
}

const AxiomVerdict& AuditReport::verdict(AxiomId id) const {
  for (const auto& v : verdicts)
    if (v.axiom == id) return v;
  throw std::logic_error("audit report is missing a verdict");
}

bool AuditReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

AuditReport audit(const ChoiceDataset& d) {
  AuditReport report;
  report.verdicts.push_back(check_nsc(d));
  report.verdicts.push_back(check_nbc(d));
  report.verdicts.push_back(check_cci(d));
  report.verdicts.push_back(check_nd(d));
  report.verdicts.push_back(check_warp(d));
  report.verdicts.push_back(check_groundedness(d));

  const bool nsc = report.verdict(AxiomId::Nsc).holds;
  const bool nbc = report.verdict(AxiomId::Nbc).holds;
  const bool cci = report.verdict(AxiomId::Cci).holds;
  const bool nd = report.verdict(AxiomId::Nd).holds;
  const bool warp = report.verdict(AxiomId::Warp).holds;
  const bool grounded = report.verdict(AxiomId::Groundedness).holds;
  const bool partial = !d.is_total();

  const auto member = [&](bool yes) { return ClassMembership{yes, yes && partial}; };
  report.memberships[ModelClass::Aic] = member(nsc);
  report.memberships[ModelClass::Raic] = member(nbc && cci && nd);
  report.memberships[ModelClass::Gaic] = member(grounded);
  report.memberships[ModelClass::Graic] = member(warp && grounded);
  report.memberships[ModelClass::Gmaic] = member(warp && grounded);

  report.warp_groundedness_discrepancy = warp && !grounded;
  if (report.warp_groundedness_discrepancy)
    report.notes.push_back(
        "WARP holds but some observed choice leaves its menu; identity-operator "
        "classes require both, so GRAIC/GMAIC membership is denied.");
  if (partial)
    report.notes.push_back(
        "Dataset is partial: axioms were checked on observed menus only, so "
        "memberships are necessary conditions rather than characterizations.");
  return report;
}

}  // namespace choiceaudit
