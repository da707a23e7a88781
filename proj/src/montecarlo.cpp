#include "urns/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

namespace urns {

EmpiricalDistribution::EmpiricalDistribution(std::map<State, std::uint64_t> counts,
                                             std::uint64_t replications)
    : counts_(std::move(counts)), replications_(replications) {}

std::uint64_t EmpiricalDistribution::count(const State& s) const {
  auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

double EmpiricalDistribution::frequency(const State& s) const {
  return replications_ == 0 ? 0.0
                            : static_cast<double>(count(s)) / static_cast<double>(replications_);
}

double EmpiricalDistribution::half_width_99(const State& s) const {
  constexpr double kZ99 = 2.5758293035489004;
  const double p = frequency(s);
  return kZ99 * std::sqrt(p * (1.0 - p) / static_cast<double>(replications_));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomEngine replication_engine(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return RandomEngine(seq);
}

std::uint64_t step_budget(const UrnSpec& spec, const State& start) {
  if (auto alpha = find_potential(spec.matrix())) {
    return static_cast<std::uint64_t>(potential_value(*alpha, start)) + 1;
  }
  return 1'000'000;
}

State simulate_one(const UrnSpec& spec, const State& start, RandomEngine& rng) {
  check_state(spec, start);
  const std::uint64_t budget = step_budget(spec, start);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  State s = start;
  std::vector<double> cumulative;
  for (std::uint64_t step = 0; !is_absorbing(spec, s); ++step) {
    if (step >= budget) {
      throw NonTerminatingError("simulation exceeded " + std::to_string(budget) + " draws");
    }
    const auto weights = draw_weights(spec, s);
    cumulative.clear();
    double acc = 0.0;
    for (const auto& w : weights) cumulative.push_back(acc += to_double(w));
    const double u = uniform(rng) * acc;
    std::size_t color = 0;
    while (color + 1 < cumulative.size() && (u >= cumulative[color] || weights[color] == 0)) {
      ++color;
    }
    std::vector<Count> next = s.counts();
    const auto row = spec.matrix().row(color);
    for (std::size_t j = 0; j < next.size(); ++j) {
      next[j] += row[j];
      if (next[j] < 0) {
        throw NegativeCountError("drawing color " + std::to_string(color) + " at (" +
                                 s.to_string() + ") leaves a negative count");
      }
    }
    s = State(std::move(next));
  }
  return s;
}

EmpiricalDistribution run_batch(const SimConfig& config, unsigned workers) {
  if (config.replications < 1) throw std::invalid_argument("replications must be >= 1");
  check_state(config.spec, config.start);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, config.replications));

  std::vector<std::map<State, std::uint64_t>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      // Contiguous index blocks; each replication owns its engine.
      const std::uint64_t begin = config.replications * w / workers;
      const std::uint64_t end = config.replications * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) {
        RandomEngine rng = replication_engine(config.seed, i);
        ++partial[w][simulate_one(config.spec, config.start, rng)];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::map<State, std::uint64_t> merged;
  for (const auto& p : partial) {
    for (const auto& [state, n] : p) merged[state] += n;
  }
  return EmpiricalDistribution(std::move(merged), config.replications);
}

}  // namespace urns
