#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urns/limit_laws.hpp"

namespace urns {

struct LimitPoint {
  Count size;
  State start;
  ScalingMap map;
  double ks;
};

struct LimitCheck {
  std::string model;
  std::string scaling;
  std::string law;
  std::vector<LimitPoint> points;
  bool decreasing;  // strictly, across consecutive sizes
};

// Known (model, scaling) sequences; `size` is the growing parameter and
// `fixed` the held one:
//   pills / exponential     size = m black, fixed n (0),  X / (n/m + log m)
//   pills / beta            size = n white, fixed m (3),  X / n
//   pills-variant / rayleigh  size = m (2m black), fixed n (0), X / (n/sqrt m + 2 sqrt m)
//   pills-variant / sqrtbeta  size = n, fixed m (2, i.e. 4 black), X / n
//   cannibal / normal       size = n + m with n = size/2, (X - E X) / sd X
// Throws SpecError for any other pair.
LimitCheck run_limit_check(std::string_view model, std::string_view scaling,
                           std::span<const Count> sizes, std::optional<Count> fixed = {});

std::vector<std::pair<std::string, std::string>> known_limit_checks();

}  // namespace urns
