#include "choiceaudit/documents.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "choiceaudit/operators.hpp"

namespace choiceaudit {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document: invalid JSON: ") + e.what());
  }
}

void require_known_fields(const json& j, std::initializer_list<std::string_view> known,
                          const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || item.key() == k;
    if (!ok) throw std::invalid_argument(where + ": unknown field \"" + item.key() + "\"");
  }
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> require_string_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(require_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_version(const std::string& version, const std::string& where) {
  if (version != kDocumentVersion)
    throw std::invalid_argument(where + ": unsupported document version \"" + version + "\"");
}

MenuMask mask_from_names(const Universe& u, const std::vector<std::string>& names,
                         const std::string& where) {
  if (names.empty()) throw std::invalid_argument(where + ": menu is empty");
  MenuMask mask = 0;
  for (const std::string& name : names) {
    const auto idx = u.find(name);
    if (!idx) throw std::invalid_argument(where + ": unknown alternative \"" + name + "\"");
    const MenuMask bit = MenuMask{1} << *idx;
    if (mask & bit)
      throw std::invalid_argument(where + ": duplicate alternative \"" + name + "\"");
    mask |= bit;
  }
  return mask;
}

std::vector<std::string> names_from_mask(const Universe& u, MenuMask mask) {
  std::vector<std::string> out;
  for (AltId a : menu_members(Menu(mask))) out.push_back(u.label(a));
  return out;
}

}  // namespace

DatasetDocument parse_dataset_document(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) throw std::invalid_argument("document: expected a JSON object");
  require_known_fields(j, {"version", "alternatives", "observations"}, "document");
  DatasetDocument doc;
  doc.version = require_string(require_field(j, "version", "document"), "version");
  check_version(doc.version, "version");
  doc.alternatives =
      require_string_array(require_field(j, "alternatives", "document"), "alternatives");
  const json& obs = require_field(j, "observations", "document");
  if (!obs.is_array()) throw std::invalid_argument("observations: expected an array");
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const std::string where = "observations[" + std::to_string(i) + "]";
    const json& entry = obs[i];
    if (!entry.is_object()) throw std::invalid_argument(where + ": expected an object");
    require_known_fields(entry, {"menu", "choice"}, where);
    ObservationEntry parsed;
    parsed.menu = require_string_array(require_field(entry, "menu", where), where + ".menu");
    parsed.choice = require_string(require_field(entry, "choice", where), where + ".choice");
    doc.observations.push_back(std::move(parsed));
  }
  return doc;
}

ChoiceDataset dataset_from_document(const DatasetDocument& doc) {
  check_version(doc.version, "version");
  Universe u(doc.alternatives);
  std::vector<std::pair<MenuMask, AltId>> obs;
  std::vector<bool> seen(static_cast<std::size_t>(u.full_mask()) + 1, false);
  for (std::size_t i = 0; i < doc.observations.size(); ++i) {
    const std::string where = "observations[" + std::to_string(i) + "]";
    const ObservationEntry& entry = doc.observations[i];
    const MenuMask mask = mask_from_names(u, entry.menu, where + ".menu");
    if (seen[mask]) throw std::invalid_argument(where + ".menu: duplicate menu");
    seen[mask] = true;
    const auto choice = u.find(entry.choice);
    if (!choice)
      throw std::invalid_argument(where + ".choice: unknown alternative \"" + entry.choice +
                                  "\"");
    obs.emplace_back(mask, *choice);
  }
  return ChoiceDataset(std::move(u), std::move(obs));
}

DatasetDocument document_from_dataset(const ChoiceDataset& d) {
  DatasetDocument doc;
  doc.version = std::string(kDocumentVersion);
  doc.alternatives = d.universe().labels();
  for (const auto& [menu, choice] : d.observations())
    doc.observations.push_back(
        {names_from_mask(d.universe(), menu), d.universe().label(choice)});
  return doc;
}

std::string serialize(const DatasetDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["alternatives"] = doc.alternatives;
  json obs = json::array();
  for (const ObservationEntry& entry : doc.observations) {
    json e;
    e["menu"] = entry.menu;
    e["choice"] = entry.choice;
    obs.push_back(std::move(e));
  }
  j["observations"] = std::move(obs);
  return j.dump(2) + "\n";
}

AgentDocument parse_agent_document(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) throw std::invalid_argument("document: expected a JSON object");
  require_known_fields(j, {"version", "alternatives", "preference", "operator"}, "document");
  AgentDocument doc;
  doc.version = require_string(require_field(j, "version", "document"), "version");
  check_version(doc.version, "version");
  doc.alternatives =
      require_string_array(require_field(j, "alternatives", "document"), "alternatives");
  doc.preference =
      require_string_array(require_field(j, "preference", "document"), "preference");
  const json& table = require_field(j, "operator", "document");
  if (!table.is_array()) throw std::invalid_argument("operator: expected an array");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string where = "operator[" + std::to_string(i) + "]";
    const json& entry = table[i];
    if (!entry.is_object()) throw std::invalid_argument(where + ": expected an object");
    require_known_fields(entry, {"menu", "image"}, where);
    OperatorEntry parsed;
    parsed.menu = require_string_array(require_field(entry, "menu", where), where + ".menu");
    parsed.image = require_string_array(require_field(entry, "image", where), where + ".image");
    doc.operator_table.push_back(std::move(parsed));
  }
  return doc;
}

std::pair<Universe, AgentSpec> agent_from_document(const AgentDocument& doc) {
  check_version(doc.version, "version");
  Universe u(doc.alternatives);
  const int n = u.size();
  const MenuMask full = u.full_mask();

  if (static_cast<int>(doc.preference.size()) != n)
    throw std::invalid_argument("preference: expected a permutation of the alternatives");
  std::vector<AltId> ranking;
  MenuMask seen_alts = 0;
  for (const std::string& name : doc.preference) {
    const auto idx = u.find(name);
    if (!idx)
      throw std::invalid_argument("preference: unknown alternative \"" + name + "\"");
    if (seen_alts & (MenuMask{1} << *idx))
      throw std::invalid_argument("preference: duplicate alternative \"" + name + "\"");
    seen_alts |= MenuMask{1} << *idx;
    ranking.push_back(*idx);
  }

  std::vector<MenuMask> images(static_cast<std::size_t>(full) + 1, 0);
  std::vector<bool> covered(static_cast<std::size_t>(full) + 1, false);
  for (std::size_t i = 0; i < doc.operator_table.size(); ++i) {
    const std::string where = "operator[" + std::to_string(i) + "]";
    const OperatorEntry& entry = doc.operator_table[i];
    const MenuMask menu = mask_from_names(u, entry.menu, where + ".menu");
    if (covered[menu]) throw std::invalid_argument(where + ".menu: duplicate menu");
    covered[menu] = true;
    images[menu] = mask_from_names(u, entry.image, where + ".image");
  }
  for (MenuMask m = 1; m <= full; ++m)
    if (!covered[m])
      throw std::invalid_argument("operator: missing menu " + menu_to_string(u, Menu(m)));

  AgentSpec agent(StrictPreference::from_ranking(ranking),
                  InterpretationOperator(n, std::move(images)), ModelClass::Unclassified);
  return {std::move(u), std::move(agent)};
}

AgentDocument document_from_agent(const Universe& u, const AgentSpec& agent) {
  if (u.size() != agent.op.universe_size())
    throw std::invalid_argument("universe size does not match the agent");
  AgentDocument doc;
  doc.version = std::string(kDocumentVersion);
  doc.alternatives = u.labels();
  for (AltId a : agent.preference.ranking()) doc.preference.push_back(u.label(a));
  for (MenuMask m = 1; m <= u.full_mask(); ++m)
    doc.operator_table.push_back(
        {names_from_mask(u, m), names_from_mask(u, agent.op.image_mask(m))});
  return doc;
}

std::string serialize(const AgentDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["alternatives"] = doc.alternatives;
  j["preference"] = doc.preference;
  json table = json::array();
  for (const OperatorEntry& entry : doc.operator_table) {
    json e;
    e["menu"] = entry.menu;
    e["image"] = entry.image;
    table.push_back(std::move(e));
  }
  j["operator"] = std::move(table);
  return j.dump(2) + "\n";
}

namespace {

json menu_json(const Universe& u, MenuMask mask) { return names_from_mask(u, mask); }

json witness_json(const Universe& u, const AxiomWitness& w) {
  if (std::holds_alternative<std::monostate>(w)) return nullptr;
  json j;
  if (const auto* nsc = std::get_if<NscWitness>(&w)) {
    json cycle = json::array();
    for (AltId a : nsc->cycle) cycle.push_back(u.label(a));
    j["cycle"] = std::move(cycle);
    json prov = json::array();
    for (const MenuPair& p : nsc->provenance) {
      json step;
      step["smaller-menu"] = menu_json(u, p.first);
      step["larger-menu"] = menu_json(u, p.second);
      prov.push_back(std::move(step));
    }
    j["provenance"] = std::move(prov);
  } else if (const auto* nbc = std::get_if<NbcWitness>(&w)) {
    j["x"] = u.label(nbc->x);
    j["y"] = u.label(nbc->y);
    j["z"] = u.label(nbc->z);
  } else if (const auto* cci = std::get_if<CciWitness>(&w)) {
    j["small"] = menu_json(u, cci->small);
    j["mid"] = menu_json(u, cci->mid);
    j["large"] = menu_json(u, cci->large);
  } else if (const auto* nd = std::get_if<NdWitness>(&w)) {
    j["x"] = u.label(nd->x);
    j["y"] = u.label(nd->y);
  } else if (const auto* warp = std::get_if<WarpWitness>(&w)) {
    j["menu-s"] = menu_json(u, warp->menu_s);
    j["menu-t"] = menu_json(u, warp->menu_t);
    j["x"] = u.label(warp->x);
    j["y"] = u.label(warp->y);
  } else if (const auto* g = std::get_if<GroundednessWitness>(&w)) {
    json menus = json::array();
    for (MenuMask m : g->menus) menus.push_back(menu_json(u, m));
    j["menus"] = std::move(menus);
  }
  return j;
}

}  // namespace

std::string audit_report_json(const ChoiceDataset& d, const AuditReport& report) {
  const Universe& u = d.universe();
  json j;
  j["version"] = std::string(kDocumentVersion);
  j["total"] = d.is_total();

  json verdicts = json::array();
  for (const AxiomVerdict& v : report.verdicts) {
    json e;
    e["axiom"] = std::string(to_string(v.axiom));
    e["holds"] = v.holds;
    e["vacuous"] = v.vacuous;
    e["witness"] = witness_json(u, v.witness);
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);

  json memberships;
  for (const auto& [model, membership] : report.memberships) {
    json e;
    e["member"] = membership.member;
    e["necessary-conditions-only"] = membership.necessary_conditions_only;
    memberships[std::string(to_string(model))] = std::move(e);
  }
  j["memberships"] = std::move(memberships);
  j["warp-groundedness-discrepancy"] = report.warp_groundedness_discrepancy;
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string characterization_report_json(const CharacterizationReport& report) {
  const auto record_json = [](const CounterexampleRecord& rec) {
    json e;
    e["dataset-choices"] = rec.dataset_choices;
    json images = json::array();
    for (MenuMask m : rec.operator_images) {
      json members = json::array();
      for (AltId a : menu_members(Menu(m))) members.push_back(a);
      images.push_back(std::move(members));
    }
    e["operator-images"] = std::move(images);
    json verdicts = json::array();
    for (const auto& [name, value] : rec.verdicts) {
      json v;
      v["property"] = name;
      v["holds"] = value;
      verdicts.push_back(std::move(v));
    }
    e["verdicts"] = std::move(verdicts);
    e["detail"] = rec.detail;
    return e;
  };
  const auto outcome_json = [&](const DualOutcome& outcome) {
    json e;
    e["holds"] = outcome.holds;
    e["axiom-positives"] = outcome.axiom_positives;
    json records = json::array();
    for (const CounterexampleRecord& rec : outcome.counterexamples)
      records.push_back(record_json(rec));
    e["counterexamples"] = std::move(records);
    return e;
  };

  json j;
  j["version"] = std::string(kDocumentVersion);
  j["theorem"] = std::string(to_string(report.theorem));
  j["n"] = report.n;
  json counts;
  for (const auto& [key, value] : report.counts) counts[key] = value;
  j["counts"] = std::move(counts);
  j["equivalence-holds"] = report.equivalence_holds;
  json records = json::array();
  for (const CounterexampleRecord& rec : report.counterexamples)
    records.push_back(record_json(rec));
  j["counterexamples"] = std::move(records);
  if (report.literal) j["literal"] = outcome_json(*report.literal);
  if (report.repaired) j["repaired"] = outcome_json(*report.repaired);
  return j.dump(2) + "\n";
}

}  // namespace choiceaudit
