#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>

#include "urns/urn.hpp"

namespace urns {

struct SimConfig {
  UrnSpec spec;
  State start;
  std::uint64_t replications = 1;
  std::uint64_t seed = 0;
};

class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  EmpiricalDistribution(std::map<State, std::uint64_t> counts, std::uint64_t replications);

  const std::map<State, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t replications() const { return replications_; }
  std::uint64_t count(const State& s) const;
  double frequency(const State& s) const;
  // Normal-approximation 99% half-width of the binomial proportion.
  double half_width_99(const State& s) const;

  bool operator==(const EmpiricalDistribution&) const = default;

 private:
  std::map<State, std::uint64_t> counts_;
  std::uint64_t replications_ = 0;
};

using RandomEngine = std::mt19937_64;

// Independent engine for replication `index` of a run seeded with `seed`;
// depends only on (seed, index).
RandomEngine replication_engine(std::uint64_t seed, std::uint64_t index);

// Draw budget: alpha . start + 1 when a decreasing potential exists, else 1e6.
std::uint64_t step_budget(const UrnSpec& spec, const State& start);

// Runs the urn until it is absorbed; throws NonTerminatingError when the
// draw budget is exhausted.
State simulate_one(const UrnSpec& spec, const State& start, RandomEngine& rng);

// workers == 0 uses the hardware concurrency. The result does not depend on
// the worker count.
EmpiricalDistribution run_batch(const SimConfig& config, unsigned workers = 0);

}  // namespace urns
