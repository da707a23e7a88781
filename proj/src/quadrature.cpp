#include "urns/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace urns {

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half) and weights, QUADPACK qk15.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& options) {
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(f, lo, hi));
  double value = panels.top().value;
  double error = panels.top().error;
  std::size_t count = 1;
  while (error > options.abs_tolerance) {
    if (count + 1 > options.max_panels) {
      throw QuadratureFailure("quadrature error estimate " + std::to_string(error) +
                              " above tolerance after " + std::to_string(count) + " panels");
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = gauss_kronrod(f, worst.lo, mid);
    Panel right = gauss_kronrod(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    // Running sums drift; refresh them from the panels once converged.
    if (error <= options.abs_tolerance) {
      double v = 0.0;
      double e = 0.0;
      auto copy = panels;
      while (!copy.empty()) {
        v += copy.top().value;
        e += copy.top().error;
        copy.pop();
      }
      value = v;
      error = e;
    }
  }
  return {value, error, count};
}

QuadratureResult integrate_unit_log_endpoint(const std::function<double(double)>& f,
                                             const QuadratureOptions& options, double eps) {
  QuadratureOptions half = options;
  half.abs_tolerance = 0.5 * options.abs_tolerance;
  const QuadratureResult body = integrate_adaptive(f, eps, 1.0, half);

  // q = exp(-t) maps (0, eps] to [-log eps, inf); beyond t0 + 60 the factor
  // exp(-t) is below 1e-26 and the integrand is bounded.
  const double t0 = -std::log(eps);
  auto transformed = [&f](double t) {
    const double q = std::exp(-t);
    return f(q) * q;
  };
  half.max_panels = options.max_panels - body.panels;
  const QuadratureResult tail = integrate_adaptive(transformed, t0, t0 + 60.0, half);
  return {body.value + tail.value, body.error_estimate + tail.error_estimate,
          body.panels + tail.panels};
}

}  // namespace urns
