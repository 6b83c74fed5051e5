#pragma once

#include <string>

#include "json.hpp"
#include "pcg/davn.hpp"
#include "pcg/state.hpp"

namespace pcg {

// Canonical wire form: supports ascending, components sorted by support.
nlohmann::json state_to_json(const PcgStateSpec& state);

// Structural parse only; run validate_pcg_state on the result. Throws
// PcgError on shape errors.
RawState raw_state_from_json(const nlohmann::json& j);

nlohmann::json violations_to_json(const std::vector<Violation>& violations);

nlohmann::json condition_set_to_json(const ConditionSet& set);

nlohmann::json pcg_to_json(const Pcg& graph);
Pcg pcg_from_json(const nlohmann::json& j);  // validates the graph shape

nlohmann::json nonstabilizer_to_json(const NonstabilizerResult& result);
nlohmann::json report_to_json(const DavnReport& report);

// Read + parse + validate in one step; throws PcgError with the violation
// list flattened into the message.
PcgStateSpec load_state_file(const std::string& path,
                             const ValidationOptions& options = {});
Pcg load_pcg_file(const std::string& path);

}  // namespace pcg
