#pragma once

#include <cstddef>
#include <functional>

#include "urns/urn.hpp"

namespace urns {

struct QuadratureFailure : UrnError {
  using UrnError::UrnError;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-12;
  std::size_t max_panels = 10000;
};

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [lo, hi]: the panel
// with the largest error estimate is bisected until the summed estimate
// meets the tolerance. Throws QuadratureFailure when the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& options = {});

// Integral over (0, 1] of an integrand that is bounded but has logarithmic
// derivative blow-up at 0 (q * log^j q terms). [eps, 1] is integrated
// directly; (0, eps] through q = exp(-t).
QuadratureResult integrate_unit_log_endpoint(const std::function<double(double)>& f,
                                             const QuadratureOptions& options = {},
                                             double eps = 1e-3);

}  // namespace urns
