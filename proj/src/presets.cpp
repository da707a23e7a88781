#include "urns/presets.hpp"

#include <charconv>

namespace urns::presets {

namespace {

AbsorbingSet vertical_wall(Count cap) { return AbsorbingSet({cap, std::nullopt}); }
AbsorbingSet both_axes() { return AbsorbingSet({Count{0}, Count{0}}); }

}  // namespace

UrnSpec pills() {
  return UrnSpec(TransitionMatrix::from_white_black(-1, 0, 1, -1), vertical_wall(0));
}

UrnSpec rpills(int r) {
  if (r < 2) throw SpecError("rpills needs r >= 2");
  std::vector<std::vector<Count>> rows(r, std::vector<Count>(r, 0));
  rows[0][0] = -1;
  for (int i = 1; i < r; ++i) {
    rows[i][i - 1] = 1;
    rows[i][i] = -1;
  }
  std::vector<std::optional<Count>> caps(r);
  caps[r - 1] = 0;
  return UrnSpec(TransitionMatrix(std::move(rows)), AbsorbingSet(std::move(caps)));
}

UrnSpec pills_variant() {
  return UrnSpec(TransitionMatrix::from_white_black(-1, 0, 1, -2), vertical_wall(1));
}

UrnSpec cannibal() {
  return UrnSpec(TransitionMatrix::from_white_black(0, -1, 1, -2), vertical_wall(1),
                 WeightMode::CannibalShifted);
}

UrnSpec cannibal_unmodified() {
  return UrnSpec(TransitionMatrix::from_white_black(0, -1, 1, -2), vertical_wall(1));
}

UrnSpec okcorral() {
  return UrnSpec(TransitionMatrix::from_white_black(0, -1, -1, 0), both_axes());
}

UrnSpec sampling() {
  return UrnSpec(TransitionMatrix::from_white_black(-1, 0, 0, -1), both_axes());
}

namespace {

int parse_rpills(std::string_view name) {
  constexpr std::string_view prefix = "rpills:";
  if (!name.starts_with(prefix)) return -1;
  const auto digits = name.substr(prefix.size());
  int r = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || r < 3) {
    throw SpecError("rpills needs an integer size >= 3, got '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace

UrnSpec by_name(std::string_view name) {
  if (name == "pills") return pills();
  if (name == "pills-variant") return pills_variant();
  if (name == "cannibal") return cannibal();
  if (name == "cannibal-unmodified") return cannibal_unmodified();
  if (name == "okcorral") return okcorral();
  if (name == "sampling") return sampling();
  if (int r = parse_rpills(name); r > 0) return rpills(r);
  throw SpecError("unknown model '" + std::string(name) + "'");
}

TypeLabel expected_type(std::string_view name) {
  if (name == "okcorral" || name == "sampling") return TypeLabel::TypeB;
  by_name(name);
  return TypeLabel::TypeA;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {
      "pills", "rpills:3", "pills-variant", "cannibal", "cannibal-unmodified", "okcorral",
      "sampling"};
  return all;
}

}  // namespace urns::presets
