#pragma once

#include <string>

#include <json.hpp>

#include "urns/urn.hpp"

namespace urns {

// {"colors": r, "matrix": [[...]], "absorbing_caps": [int|null, ...],
//  "weight_mode": "standard"|"cannibal_shifted"}; matrix rows and columns in
// State order. Parse errors throw SpecError.
nlohmann::json spec_to_json(const UrnSpec& spec);
UrnSpec spec_from_json(const nlohmann::json& doc);
UrnSpec load_spec_file(const std::string& path);

// "1,2,3" -> State; throws SpecError on malformed input.
State parse_state(const std::string& text);

}  // namespace urns
