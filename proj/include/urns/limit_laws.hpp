#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "urns/exact_dp.hpp"

namespace urns {

enum class LawKind { Exponential1, Rayleigh, Beta1m, SqrtBeta, StdNormal };

class LimitLaw {
 public:
  static LimitLaw exponential() { return LimitLaw(LawKind::Exponential1, 0); }
  static LimitLaw rayleigh() { return LimitLaw(LawKind::Rayleigh, 0); }
  static LimitLaw beta_1m(int m);     // density m (1-x)^(m-1) on [0, 1]
  static LimitLaw sqrt_beta(int m);   // density 2 m x (1-x^2)^(m-1) on [0, 1]
  static LimitLaw std_normal() { return LimitLaw(LawKind::StdNormal, 0); }

  LawKind kind() const { return kind_; }
  int parameter() const { return m_; }
  std::string name() const;

  double density(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;  // p in (0, 1)

 private:
  LimitLaw(LawKind kind, int m) : kind_(kind), m_(m) {}
  LawKind kind_;
  int m_;
};

// x -> (x - shift) / scale.
struct ScalingMap {
  double shift = 0.0;
  double scale = 1.0;

  double apply(double x) const { return (x - shift) / scale; }
};

// Right-continuous step CDF given by sorted jump points and the CDF value
// reached at each point.
class StepCdf {
 public:
  StepCdf() = default;
  StepCdf(std::vector<double> points, std::vector<double> values);

  // Builds from (point, mass) pairs in any order; equal points merge.
  static StepCdf from_masses(std::vector<std::pair<double, double>> masses);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }
  double operator()(double x) const;

 private:
  std::vector<double> points_;
  std::vector<double> values_;
};

// CDF of the mapped count of `color` (default: the observed color).
StepCdf scaled_cdf(const AbsorptionDistribution& dist, const ScalingMap& map, std::size_t color);
StepCdf scaled_cdf(const AbsorptionDistribution& dist, const ScalingMap& map);

// sup_x |F(x) - G(x)|, checking both one-sided limits at every jump.
double ks_distance(const StepCdf& cdf, const LimitLaw& law);
double ks_distance(const StepCdf& a, const StepCdf& b);

// Mass 1/N at each quantile (i - 1/2)/N, i = 1..N.
StepCdf quantile_discretization(const LimitLaw& law, std::size_t n);

}  // namespace urns
