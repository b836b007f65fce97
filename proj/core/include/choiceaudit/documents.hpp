#pragma once

#include <string>
#include <utility>
#include <vector>

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/core.hpp"
#include "choiceaudit/oracle.hpp"
#include "choiceaudit/revealed.hpp"

// Versioned JSON file formats and canonical report serialization. Parsing
// throws std::invalid_argument naming the offending field; serialization is
// canonical (sorted keys, menus as name arrays in universe order) so equal
// values always produce identical bytes.
namespace choiceaudit {

inline constexpr std::string_view kDocumentVersion = "1";

struct ObservationEntry {
  std::vector<std::string> menu;
  std::string choice;
};

struct DatasetDocument {
  std::string version;
  std::vector<std::string> alternatives;
  std::vector<ObservationEntry> observations;
};

DatasetDocument parse_dataset_document(const std::string& json_text);
ChoiceDataset dataset_from_document(const DatasetDocument& doc);
DatasetDocument document_from_dataset(const ChoiceDataset& d);
std::string serialize(const DatasetDocument& doc);

struct OperatorEntry {
  std::vector<std::string> menu;
  std::vector<std::string> image;
};

struct AgentDocument {
  std::string version;
  std::vector<std::string> alternatives;
  std::vector<std::string> preference;  // best to worst
  std::vector<OperatorEntry> operator_table;
};

AgentDocument parse_agent_document(const std::string& json_text);
std::pair<Universe, AgentSpec> agent_from_document(const AgentDocument& doc);
AgentDocument document_from_agent(const Universe& u, const AgentSpec& agent);
std::string serialize(const AgentDocument& doc);

std::string audit_report_json(const ChoiceDataset& d, const AuditReport& report);
std::string characterization_report_json(const CharacterizationReport& report);

}  // namespace choiceaudit
