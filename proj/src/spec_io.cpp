#include "urns/spec_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace urns {

nlohmann::json spec_to_json(const UrnSpec& spec) {
  nlohmann::json caps = nlohmann::json::array();
  for (const auto& c : spec.absorbing().caps()) {
    caps.push_back(c ? nlohmann::json(*c) : nlohmann::json(nullptr));
  }
  return {{"colors", spec.colors()},
          {"matrix", spec.matrix().rows()},
          {"absorbing_caps", caps},
          {"weight_mode", to_string(spec.weight_mode())}};
}

UrnSpec spec_from_json(const nlohmann::json& doc) {
  try {
    const auto colors = doc.at("colors").get<std::size_t>();
    auto rows = doc.at("matrix").get<std::vector<std::vector<Count>>>();
    if (rows.size() != colors) throw SpecError("matrix must have 'colors' rows");
    std::vector<std::optional<Count>> caps;
    for (const auto& c : doc.at("absorbing_caps")) {
      if (c.is_null()) caps.emplace_back();
      else caps.emplace_back(c.get<Count>());
    }
    WeightMode mode = WeightMode::Standard;
    if (doc.contains("weight_mode")) {
      const auto text = doc.at("weight_mode").get<std::string>();
      if (text == "cannibal_shifted") mode = WeightMode::CannibalShifted;
      else if (text != "standard") throw SpecError("unknown weight_mode '" + text + "'");
    }
    return UrnSpec(TransitionMatrix(std::move(rows)), AbsorbingSet(std::move(caps)), mode);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
}

UrnSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  try {
    return spec_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("spec file is not valid JSON: ") + e.what());
  }
}

State parse_state(const std::string& text) {
  std::vector<Count> counts;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    Count value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first < last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw SpecError("cannot parse state '" + text + "'");
    }
    counts.push_back(value);
  }
  if (counts.empty()) throw SpecError("empty state");
  return State(std::move(counts));
}

}  // namespace urns
