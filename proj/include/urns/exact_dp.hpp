#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "urns/rational.hpp"
#include "urns/urn.hpp"

namespace urns {

// Exact law of the absorbing state reached from `start`.
class AbsorptionDistribution {
 public:
  AbsorptionDistribution(State start, std::map<State, Rational> entries);

  const State& start() const { return start_; }
  const std::map<State, Rational>& entries() const { return entries_; }
  Rational probability(const State& s) const;
  Rational total() const;

  // Projection onto one color's count at absorption.
  std::map<Count, Rational> marginal(std::size_t color) const;

  bool operator==(const AbsorptionDistribution&) const = default;

 private:
  State start_;
  std::map<State, Rational> entries_;
};

struct MomentReport {
  std::vector<Rational> factorial_moments;  // E(X), E(X(X-1)), ...
  Rational mean;
  Rational variance;  // zero when only the first moment was requested
};

// Solves the first-draw recurrence over every state reachable from `start`.
// Throws NonTerminatingError when the reachable graph contains a cycle, and
// NegativeCountError / DeadEndError from the step semantics.
AbsorptionDistribution absorption_distribution(const UrnSpec& spec, const State& start);

// Number of states visited by the last solve in the calling thread.
std::size_t last_reachable_state_count();

double pgf_eval(const AbsorptionDistribution& dist, double v1, double v2);
double pgf_eval(const AbsorptionDistribution& dist, std::span<const double> v);
Rational pgf_exact(const AbsorptionDistribution& dist, std::span<const Rational> v);

// Factorial moments of one color's count; order >= 1.
MomentReport factorial_moments(const AbsorptionDistribution& dist, std::size_t color, int order);
MomentReport white_marginal_moments(const AbsorptionDistribution& dist, int order);

struct CapExceededError : UrnError {
  using UrnError::UrnError;
};

// Brute-force reference: sums the weights of every path from `start` to each
// absorbing state. Refuses starts with more than `ball_cap` balls.
AbsorptionDistribution enumerate_paths_oracle(const UrnSpec& spec, const State& start,
                                              Count ball_cap = 12);

}  // namespace urns
