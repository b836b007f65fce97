// Command-line surface for the choice-audit toolkit.
//
// Exit codes, uniform across subcommands:
//   0  success / property holds
//   1  semantic negative (an axiom fails, no representation exists,
//      a misaligned pair was found, an equivalence check failed)
//   2  input or usage error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/documents.hpp"
#include "choiceaudit/oracle.hpp"
#include "choiceaudit/rationalize.hpp"
#include "choiceaudit/revealed.hpp"

namespace ca = choiceaudit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed while writing file: " + path);
}

// CHOICE_AUDIT_MAX_N may lower size caps, never raise them.
std::optional<int> configured_max_n() {
  const char* raw = std::getenv("CHOICE_AUDIT_MAX_N");
  if (raw == nullptr) return std::nullopt;
  const std::string text(raw);
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error("CHOICE_AUDIT_MAX_N must be a positive integer");
  const int value = std::stoi(text);
  if (value < 1) throw std::runtime_error("CHOICE_AUDIT_MAX_N must be a positive integer");
  return value;
}

void enforce_size_cap(int n) {
  const std::optional<int> cap = configured_max_n();
  if (cap && n > *cap)
    throw std::runtime_error("n=" + std::to_string(n) +
                             " exceeds CHOICE_AUDIT_MAX_N=" + std::to_string(*cap));
}

ca::ChoiceDataset load_dataset(const std::string& path) {
  return ca::dataset_from_document(ca::parse_dataset_document(read_file(path)));
}

ca::ModelClass parse_model(const std::string& name) {
  const auto model = ca::model_class_from_string(name);
  if (!model || *model == ca::ModelClass::Unclassified)
    throw std::runtime_error("unknown model class: " + name);
  return *model;
}

ca::Universe make_universe(int n) {
  static const std::vector<std::string> kLabels = {"x", "y", "z", "w"};
  if (n < 1 || n > static_cast<int>(kLabels.size()))
    throw std::runtime_error("simulation universes are capped at 4 alternatives");
  return ca::Universe(std::vector<std::string>(kLabels.begin(), kLabels.begin() + n));
}

std::string menu_names(const ca::Universe& u, ca::MenuMask m) {
  return ca::menu_to_string(u, ca::Menu(m));
}

std::string pairs_to_string(const ca::Universe& u, const ca::StrictPreference& p) {
  std::string out;
  for (const auto& [a, b] : p.pairs()) {
    if (!out.empty()) out += ", ";
    out += u.label(a) + ">" + u.label(b);
  }
  return out.empty() ? "(none)" : out;
}

std::string ranking_to_string(const ca::Universe& u, const ca::StrictPreference& p) {
  std::string out;
  for (ca::AltId a : p.ranking()) {
    if (!out.empty()) out += " > ";
    out += u.label(a);
  }
  return out;
}

std::string witness_text(const ca::Universe& u, const ca::AxiomWitness& w) {
  if (const auto* nsc = std::get_if<ca::NscWitness>(&w)) {
    std::string out = "cycle ";
    for (std::size_t i = 0; i < nsc->cycle.size(); ++i)
      out += u.label(nsc->cycle[i]) + " -> ";
    out += u.label(nsc->cycle.front());
    out += " [from";
    for (const ca::MenuPair& p : nsc->provenance)
      out += " (" + menu_names(u, p.first) + " within " + menu_names(u, p.second) + ")";
    return out + "]";
  }
  if (const auto* nbc = std::get_if<ca::NbcWitness>(&w))
    return "triple (" + u.label(nbc->x) + ", " + u.label(nbc->y) + ", " + u.label(nbc->z) +
           ") has three pairwise-distinct binary choices";
  if (const auto* cci = std::get_if<ca::CciWitness>(&w))
    return "chain " + menu_names(u, cci->small) + " < " + menu_names(u, cci->mid) + " < " +
           menu_names(u, cci->large) + " changes its choice in the middle";
  if (const auto* nd = std::get_if<ca::NdWitness>(&w))
    return "c({" + u.label(nd->x) + "}) = c({" + u.label(nd->y) + "})";
  if (const auto* warp = std::get_if<ca::WarpWitness>(&w))
    return "S=" + menu_names(u, warp->menu_s) + " chose " + u.label(warp->x) + ", T=" +
           menu_names(u, warp->menu_t) + " chose " + u.label(warp->y) +
           ", each available in the other menu";
  if (const auto* g = std::get_if<ca::GroundednessWitness>(&w)) {
    std::string out = "choices leave their menus at";
    for (ca::MenuMask m : g->menus) out += " " + menu_names(u, m);
    return out;
  }
  return "";
}

int run_audit(const std::string& path, const std::string& format) {
  const ca::ChoiceDataset d = load_dataset(path);
  const ca::AuditReport report = ca::audit(d);
  if (format == "json") {
    std::cout << ca::audit_report_json(d, report);
  } else {
    for (const ca::AxiomVerdict& v : report.verdicts) {
      std::cout << ca::to_string(v.axiom) << ": ";
      if (v.holds)
        std::cout << (v.vacuous ? "holds (vacuously)" : "holds");
      else
        std::cout << "FAILS — " << witness_text(d.universe(), v.witness);
      std::cout << "\n";
    }
    for (const auto& [model, membership] : report.memberships) {
      std::cout << ca::to_string(model) << ": ";
      if (!membership.member)
        std::cout << "not a member";
      else if (membership.necessary_conditions_only)
        std::cout << "necessary conditions hold (partial data)";
      else
        std::cout << "member";
      std::cout << "\n";
    }
    if (report.warp_groundedness_discrepancy)
      std::cout << "warp-groundedness discrepancy: WARP holds but groundedness fails\n";
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
  }
  return report.all_hold() ? 0 : 1;
}

int run_identify(const std::string& path, const std::string& cls) {
  const ca::ChoiceDataset d = load_dataset(path);
  const ca::ModelClass model = parse_model(cls);
  const ca::IdentificationResult result = ca::identify(d, model);
  const ca::Universe& u = d.universe();

  std::cout << "class: " << ca::to_string(model) << "\n";
  std::cout << "class-established: " << (result.class_established ? "yes" : "no") << "\n";
  const ca::RevealedRelation rel = ca::revealed_one_step(d);
  std::cout << "revealed preference (one step): " << pairs_to_string(u, rel.one_step) << "\n";
  std::cout << "revealed preference (closure): " << pairs_to_string(u, rel.closure)
            << (rel.cyclic ? " [cyclic]" : "") << "\n";
  const ca::RevealedConsideration cons = ca::revealed_consideration(d);
  std::cout << "revealed consideration:\n";
  for (ca::MenuMask m = 1; m <= u.full_mask(); ++m)
    if (cons.table[m] != 0 || d.observed(m))
      std::cout << "  " << menu_names(u, m) << ": " << menu_names(u, cons.table[m]) << "\n";

  if (result.preference_identified && result.preference)
    std::cout << "identified preference: " << ranking_to_string(u, *result.preference) << "\n";
  else
    std::cout << "identified preference: UNIDENTIFIED\n";
  if (result.op) {
    std::cout << "identified operator:\n";
    for (ca::MenuMask m = 1; m <= u.full_mask(); ++m)
      std::cout << "  I(" << menu_names(u, m) << ") = " << menu_names(u, result.op->image_mask(m))
                << "\n";
  }
  if (!result.bounds.empty()) {
    std::cout << "operator bounds:\n";
    for (const ca::GaicMenuBounds& b : result.bounds)
      std::cout << "  " << menu_names(u, b.menu) << ": lower " << menu_names(u, b.lower)
                << ", upper " << menu_names(u, b.upper)
                << (b.observed ? "" : " (unobserved)") << "\n";
  }
  for (const std::string& note : result.notes) std::cout << "note: " << note << "\n";
  return result.class_established ? 0 : 1;
}

int run_rationalize(const std::string& path, const std::string& cls, const std::string& out) {
  const ca::ChoiceDataset d = load_dataset(path);
  const ca::ModelClass model = parse_model(cls);
  ca::ConstructionResult result = [&] {
    switch (model) {
      case ca::ModelClass::Aic: return ca::construct_aic(d);
      case ca::ModelClass::Raic: return ca::construct_raic(d);
      case ca::ModelClass::Graic: return ca::construct_graic(d);
      case ca::ModelClass::Gaic: return ca::construct_gaic(d);
      case ca::ModelClass::Gmaic: return ca::construct_gmaic(d);
      default: throw std::runtime_error("unknown model class: " + cls);
    }
  }();

  if (!result.ok()) {
    std::cout << "NONE: " << result.failure << "\n";
    if (result.blocking)
      std::cout << "blocking axiom: " << ca::to_string(result.blocking->axiom) << " — "
                << witness_text(d.universe(), result.blocking->witness) << "\n";
    for (const std::string& note : result.notes) std::cout << "note: " << note << "\n";
    return 1;
  }

  const ca::Representation& rep = *result.representation;
  const std::string text = ca::serialize(ca::document_from_agent(d.universe(), rep.agent));
  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "scope: " << (rep.scope == ca::Scope::Total ? "TOTAL" : "OBSERVED-ONLY") << "\n";
  for (const std::string& note : result.notes) info << "note: " << note << "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    info << "wrote " << out << "\n";
  }
  return 0;
}

int run_oracle(const std::string& theorem, int n, const std::string& out, int threads) {
  enforce_size_cap(n);
  const std::optional<ca::TheoremId> id = ca::theorem_from_string(theorem);
  if (!id) throw std::runtime_error("unknown theorem id: " + theorem);
  const ca::CharacterizationReport report = ca::verify_characterization(*id, n, threads);
  const std::string text = ca::characterization_report_json(report);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return report.equivalence_holds ? 0 : 1;
}

int run_simulate(std::uint64_t seed, const std::string& cls, int n, const std::string& out) {
  enforce_size_cap(n);
  const ca::ModelClass model = parse_model(cls);
  const ca::Universe u = make_universe(n);
  const ca::SimulationResult result = ca::simulate(seed, model, u);

  std::string agent_path = out;
  const std::string suffix = ".json";
  if (agent_path.size() >= suffix.size() &&
      agent_path.compare(agent_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    agent_path.resize(agent_path.size() - suffix.size());
  agent_path += ".agent.json";

  write_file(out, ca::serialize(ca::document_from_dataset(result.dataset)));
  write_file(agent_path, ca::serialize(ca::document_from_agent(u, result.agent)));
  std::cout << "wrote " << out << "\n";
  std::cout << "wrote " << agent_path << "\n";
  return 0;
}

int run_align(const std::string& path, const std::string& dm) {
  const ca::ChoiceDataset d = load_dataset(path);
  const ca::Universe& u = d.universe();

  std::vector<ca::AltId> ranking;
  std::string token;
  std::istringstream stream(dm);
  while (std::getline(stream, token, '>')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw std::runtime_error("--dm: empty name in \"" + dm + "\"");
    const auto last = token.find_last_not_of(" \t");
    const std::string name = token.substr(first, last - first + 1);
    const auto idx = u.find(name);
    if (!idx) throw std::runtime_error("--dm: unknown alternative \"" + name + "\"");
    ranking.push_back(*idx);
  }
  if (static_cast<int>(ranking.size()) != u.size())
    throw std::runtime_error("--dm must rank every alternative exactly once");
  ca::StrictPreference order = [&] {
    try {
      return ca::StrictPreference::from_ranking(ranking);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("--dm must rank every alternative exactly once");
    }
  }();

  const ca::AlignmentReport report = ca::alignment_report(d, order);
  for (const ca::AlignmentEntry& entry : report.pairs) {
    std::cout << u.label(entry.a) << "," << u.label(entry.b) << ": ";
    switch (entry.status) {
      case ca::PairAlignment::Aligned:
        std::cout << "ALIGNED";
        break;
      case ca::PairAlignment::Misaligned:
        std::cout << "MISALIGNED";
        break;
      case ca::PairAlignment::Undetermined:
        std::cout << "UNDETERMINED";
        break;
    }
    if (entry.revealed)
      std::cout << " (revealed " << u.label(entry.revealed->first) << ">"
                << u.label(entry.revealed->second) << ")";
    else if (entry.status == ca::PairAlignment::Misaligned)
      std::cout << " (revealed in both directions)";
    std::cout << "\n";
  }
  std::cout << "aligned: " << report.aligned << "  misaligned: " << report.misaligned
            << "  undetermined: " << report.undetermined << "\n";
  return report.misaligned > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit, identify, rationalize, and stress-test choice functions"};
  app.require_subcommand(1);

  std::string audit_input, audit_format = "json";
  CLI::App* cmd_audit = app.add_subcommand("audit", "Check the axioms on a dataset");
  cmd_audit->add_option("input", audit_input, "dataset JSON file")->required();
  cmd_audit->add_option("--format", audit_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string identify_input, identify_class;
  CLI::App* cmd_identify =
      app.add_subcommand("identify", "Report what the data pins down under a model class");
  cmd_identify->add_option("input", identify_input, "dataset JSON file")->required();
  cmd_identify->add_option("--class", identify_class, "model class")
      ->required()
      ->check(CLI::IsMember({"aic", "raic", "graic", "gaic", "gmaic"}));

  std::string rationalize_input, rationalize_class, rationalize_out;
  CLI::App* cmd_rationalize =
      app.add_subcommand("rationalize", "Construct a representing agent, or explain why none exists");
  cmd_rationalize->add_option("input", rationalize_input, "dataset JSON file")->required();
  cmd_rationalize->add_option("--class", rationalize_class, "model class")
      ->required()
      ->check(CLI::IsMember({"aic", "raic", "graic", "gaic", "gmaic"}));
  cmd_rationalize->add_option("--out", rationalize_out, "agent JSON output path");

  std::string oracle_theorem, oracle_out;
  int oracle_n = 0, oracle_threads = 1;
  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "Exhaustively verify a characterization claim");
  cmd_oracle->add_option("--theorem", oracle_theorem, "claim to verify")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "thm5", "prop1", "prop2", "prop4",
                             "logical-consistency"}));
  cmd_oracle->add_option("--n", oracle_n, "universe size")->required();
  cmd_oracle->add_option("--out", oracle_out, "report JSON output path");
  cmd_oracle->add_option("--threads", oracle_threads, "worker threads")
      ->check(CLI::Range(1, 64));

  std::string simulate_class, simulate_out;
  std::uint64_t simulate_seed = 0;
  int simulate_n = 0;
  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "Sample an agent of a class and derive its choice function");
  cmd_simulate->add_option("--seed", simulate_seed, "random seed")->required();
  cmd_simulate->add_option("--class", simulate_class, "model class")
      ->required()
      ->check(CLI::IsMember({"aic", "raic", "graic", "gaic", "gmaic"}));
  cmd_simulate->add_option("--n", simulate_n, "universe size")->required();
  cmd_simulate->add_option("--out", simulate_out, "dataset JSON output path")->required();

  std::string align_input, align_dm;
  CLI::App* cmd_align =
      app.add_subcommand("align", "Compare revealed preference with a stated order");
  cmd_align->add_option("input", align_input, "dataset JSON file")->required();
  cmd_align->add_option("--dm", align_dm, "stated order, e.g. \"x>y>z\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_audit->parsed()) return run_audit(audit_input, audit_format);
    if (cmd_identify->parsed()) return run_identify(identify_input, identify_class);
    if (cmd_rationalize->parsed())
      return run_rationalize(rationalize_input, rationalize_class, rationalize_out);
    if (cmd_oracle->parsed())
      return run_oracle(oracle_theorem, oracle_n, oracle_out, oracle_threads);
    if (cmd_simulate->parsed())
      return run_simulate(simulate_seed, simulate_class, simulate_n, simulate_out);
    if (cmd_align->parsed()) return run_align(align_input, align_dm);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand given\n";
  return 2;
}
