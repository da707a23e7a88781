#include "urns/limit_check.hpp"

#include <cmath>

#include "urns/presets.hpp"

namespace urns {

namespace {

struct Sequence {
  UrnSpec spec;
  LimitLaw law;
  State start;
  ScalingMap map;
};

Sequence pick(std::string_view model, std::string_view scaling, Count size,
              std::optional<Count> fixed) {
  const auto sz = static_cast<double>(size);
  if (model == "pills" && scaling == "exponential") {
    const Count n = fixed.value_or(0);
    return {presets::pills(), LimitLaw::exponential(), State{size, n},
            {0.0, static_cast<double>(n) / sz + std::log(sz)}};
  }
  if (model == "pills" && scaling == "beta") {
    const Count m = fixed.value_or(3);
    return {presets::pills(), LimitLaw::beta_1m(static_cast<int>(m)), State{m, size}, {0.0, sz}};
  }
  if (model == "pills-variant" && scaling == "rayleigh") {
    const Count n = fixed.value_or(0);
    return {presets::pills_variant(), LimitLaw::rayleigh(), State{2 * size, n},
            {0.0, static_cast<double>(n) / std::sqrt(sz) + 2.0 * std::sqrt(sz)}};
  }
  if (model == "pills-variant" && scaling == "sqrtbeta") {
    const Count m = fixed.value_or(2);
    return {presets::pills_variant(), LimitLaw::sqrt_beta(static_cast<int>(m)),
            State{2 * m, size}, {0.0, sz}};
  }
  if (model == "cannibal" && scaling == "normal") {
    const Count n = size / 2;
    // Shift and scale are filled in from the exact moments.
    return {presets::cannibal(), LimitLaw::std_normal(), State{size - n, n}, {0.0, 1.0}};
  }
  throw SpecError("no limit law for model '" + std::string(model) + "' with scaling '" +
                  std::string(scaling) + "'");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> known_limit_checks() {
  return {{"pills", "exponential"},
          {"pills", "beta"},
          {"pills-variant", "rayleigh"},
          {"pills-variant", "sqrtbeta"},
          {"cannibal", "normal"}};
}

LimitCheck run_limit_check(std::string_view model, std::string_view scaling,
                           std::span<const Count> sizes, std::optional<Count> fixed) {
  LimitCheck check{std::string(model), std::string(scaling), {}, {}, true};
  if (sizes.empty()) throw SpecError("limit check needs at least one size");
  for (Count size : sizes) {
    if (size < 1) throw SpecError("limit check sizes must be >= 1");
    Sequence seq = pick(model, scaling, size, fixed);
    check.law = seq.law.name();
    const auto dist = absorption_distribution(seq.spec, seq.start);
    if (seq.law.kind() == LawKind::StdNormal) {
      const auto moments = white_marginal_moments(dist, 2);
      seq.map.shift = to_double(moments.mean);
      seq.map.scale = std::sqrt(to_double(moments.variance));
    }
    const double ks = ks_distance(scaled_cdf(dist, seq.map), seq.law);
    if (!check.points.empty() && !(ks < check.points.back().ks)) check.decreasing = false;
    check.points.push_back({size, seq.start, seq.map, ks});
  }
  return check;
}

}  // namespace urns
