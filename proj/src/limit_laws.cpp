#include "urns/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace urns {

LimitLaw LimitLaw::beta_1m(int m) {
  if (m < 1) throw std::invalid_argument("Beta(1, m) needs m >= 1");
  return LimitLaw(LawKind::Beta1m, m);
}

LimitLaw LimitLaw::sqrt_beta(int m) {
  if (m < 1) throw std::invalid_argument("sqrt Beta(1, m) needs m >= 1");
  return LimitLaw(LawKind::SqrtBeta, m);
}

std::string LimitLaw::name() const {
  switch (kind_) {
    case LawKind::Exponential1: return "Exponential(1)";
    case LawKind::Rayleigh: return "Rayleigh";
    case LawKind::Beta1m: return "Beta(1," + std::to_string(m_) + ")";
    case LawKind::SqrtBeta: return "sqrt(Beta(1," + std::to_string(m_) + "))";
    case LawKind::StdNormal: break;
  }
  return "Normal(0,1)";
}

double LimitLaw::density(double x) const {
  const double m = m_;
  switch (kind_) {
    case LawKind::Exponential1: return x < 0.0 ? 0.0 : std::exp(-x);
    case LawKind::Rayleigh: return x < 0.0 ? 0.0 : 2.0 * x * std::exp(-x * x);
    case LawKind::Beta1m:
      return (x < 0.0 || x > 1.0) ? 0.0 : m * std::pow(1.0 - x, m - 1.0);
    case LawKind::SqrtBeta:
      return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * m * x * std::pow(1.0 - x * x, m - 1.0);
    case LawKind::StdNormal: break;
  }
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double LimitLaw::cdf(double x) const {
  const double m = m_;
  switch (kind_) {
    case LawKind::Exponential1: return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case LawKind::Rayleigh: return x <= 0.0 ? 0.0 : -std::expm1(-x * x);
    case LawKind::Beta1m:
      if (x <= 0.0) return 0.0;
      return x >= 1.0 ? 1.0 : 1.0 - std::pow(1.0 - x, m);
    case LawKind::SqrtBeta:
      if (x <= 0.0) return 0.0;
      return x >= 1.0 ? 1.0 : 1.0 - std::pow(1.0 - x * x, m);
    case LawKind::StdNormal: break;
  }
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double LimitLaw::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile needs p in (0, 1)");
  const double m = m_;
  switch (kind_) {
    case LawKind::Exponential1: return -std::log1p(-p);
    case LawKind::Rayleigh: return std::sqrt(-std::log1p(-p));
    case LawKind::Beta1m: return 1.0 - std::pow(1.0 - p, 1.0 / m);
    case LawKind::SqrtBeta: return std::sqrt(1.0 - std::pow(1.0 - p, 1.0 / m));
    case LawKind::StdNormal: break;
  }
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

StepCdf::StepCdf(std::vector<double> points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() != values_.size()) throw std::invalid_argument("StepCdf size mismatch");
  if (!std::is_sorted(points_.begin(), points_.end())) {
    throw std::invalid_argument("StepCdf points must be sorted");
  }
}

StepCdf StepCdf::from_masses(std::vector<std::pair<double, double>> masses) {
  std::sort(masses.begin(), masses.end());
  std::vector<double> points;
  std::vector<double> values;
  double acc = 0.0;
  for (const auto& [x, p] : masses) {
    acc += p;
    if (!points.empty() && points.back() == x) {
      values.back() = acc;
    } else {
      points.push_back(x);
      values.push_back(acc);
    }
  }
  return StepCdf(std::move(points), std::move(values));
}

double StepCdf::operator()(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x);
  if (it == points_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

StepCdf scaled_cdf(const AbsorptionDistribution& dist, const ScalingMap& map, std::size_t color) {
  if (!(map.scale > 0.0)) throw std::invalid_argument("scaling map needs scale > 0");
  std::vector<std::pair<double, double>> masses;
  for (const auto& [k, p] : dist.marginal(color)) {
    masses.emplace_back(map.apply(static_cast<double>(k)), to_double(p));
  }
  return StepCdf::from_masses(std::move(masses));
}

StepCdf scaled_cdf(const AbsorptionDistribution& dist, const ScalingMap& map) {
  return scaled_cdf(dist, map, dist.start().colors() == 2 ? kWhite : 0);
}

double ks_distance(const StepCdf& cdf, const LimitLaw& law) {
  double sup = 0.0;
  double before = 0.0;
  for (std::size_t i = 0; i < cdf.points().size(); ++i) {
    const double g = law.cdf(cdf.points()[i]);
    sup = std::max({sup, std::abs(cdf.values()[i] - g), std::abs(before - g)});
    before = cdf.values()[i];
  }
  // Past the last jump the step CDF is flat at its final value.
  if (!cdf.points().empty()) sup = std::max(sup, std::abs(before - 1.0));
  return sup;
}

double ks_distance(const StepCdf& a, const StepCdf& b) {
  double sup = 0.0;
  for (double x : a.points()) sup = std::max(sup, std::abs(a(x) - b(x)));
  for (double x : b.points()) sup = std::max(sup, std::abs(a(x) - b(x)));
  return sup;
}

StepCdf quantile_discretization(const LimitLaw& law, std::size_t n) {
  std::vector<std::pair<double, double>> masses;
  masses.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double p = (static_cast<double>(i) - 0.5) / static_cast<double>(n);
    masses.emplace_back(law.quantile(p), 1.0 / static_cast<double>(n));
  }
  return StepCdf::from_masses(std::move(masses));
}

}  // namespace urns
