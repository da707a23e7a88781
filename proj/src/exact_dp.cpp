#include "urns/exact_dp.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace urns {

AbsorptionDistribution::AbsorptionDistribution(State start, std::map<State, Rational> entries)
    : start_(std::move(start)), entries_(std::move(entries)) {}

Rational AbsorptionDistribution::probability(const State& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational AbsorptionDistribution::total() const {
  Rational sum = 0;
  for (const auto& [state, p] : entries_) sum += p;
  return sum;
}

std::map<Count, Rational> AbsorptionDistribution::marginal(std::size_t color) const {
  std::map<Count, Rational> result;
  for (const auto& [state, p] : entries_) result[state[color]] += p;
  return result;
}

namespace {

thread_local std::size_t g_last_state_count = 0;

struct Node {
  State state;
  std::vector<std::pair<std::size_t, Rational>> successors;
  bool absorbing = false;
};

// Discovers the reachable graph and returns node indices in topological
// order (every node before its successors).
std::vector<std::size_t> reachable_in_topological_order(const UrnSpec& spec, const State& start,
                                                        std::vector<Node>& nodes) {
  enum class Mark : std::uint8_t { OnStack, Done };
  std::unordered_map<State, std::size_t, StateHash> index;
  std::vector<Mark> marks;
  std::vector<std::size_t> postorder;

  auto intern = [&](const State& s) -> std::pair<std::size_t, bool> {
    auto [it, inserted] = index.try_emplace(s, nodes.size());
    if (inserted) {
      nodes.push_back({s, {}, is_absorbing(spec, s)});
      marks.push_back(Mark::OnStack);
    }
    return {it->second, inserted};
  };

  struct Frame {
    std::size_t node;
    std::size_t next_child;
  };
  std::vector<std::vector<State>> pending;
  auto expand = [&](std::size_t v) {
    pending.emplace_back();
    if (nodes[v].absorbing) return;
    for (auto& o : step_outcomes(spec, nodes[v].state)) {
      nodes[v].successors.emplace_back(0, o.weight);
      pending[v].push_back(std::move(o.next));
    }
  };

  std::vector<Frame> stack;
  stack.push_back({intern(start).first, 0});
  expand(0);

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const std::size_t u = frame.node;
    if (frame.next_child == pending[u].size()) {
      marks[u] = Mark::Done;
      postorder.push_back(u);
      pending[u].clear();
      pending[u].shrink_to_fit();
      stack.pop_back();
      continue;
    }
    const std::size_t child_slot = frame.next_child++;
    const State child_state = pending[u][child_slot];
    auto [v, fresh] = intern(child_state);
    nodes[u].successors[child_slot].first = v;
    if (fresh) {
      expand(v);
      stack.push_back({v, 0});
    } else if (marks[v] == Mark::OnStack) {
      throw NonTerminatingError("urn process can revisit state (" + child_state.to_string() +
                                ")");
    }
  }
  return {postorder.rbegin(), postorder.rend()};
}

}  // namespace

AbsorptionDistribution absorption_distribution(const UrnSpec& spec, const State& start) {
  check_state(spec, start);
  std::vector<Node> nodes;
  const auto order = reachable_in_topological_order(spec, start, nodes);
  g_last_state_count = nodes.size();

  std::vector<Rational> mass(nodes.size());
  mass[order.front()] = 1;
  std::map<State, Rational> absorbed;
  for (std::size_t u : order) {
    if (mass[u] == 0) continue;
    if (nodes[u].absorbing) {
      absorbed.emplace(nodes[u].state, std::move(mass[u]));
      continue;
    }
    for (const auto& [v, w] : nodes[u].successors) mass[v] += mass[u] * w;
    mass[u] = 0;
  }
  return AbsorptionDistribution(start, std::move(absorbed));
}

std::size_t last_reachable_state_count() { return g_last_state_count; }

double pgf_eval(const AbsorptionDistribution& dist, double v1, double v2) {
  const double v[2] = {v1, v2};
  return pgf_eval(dist, std::span<const double>(v, 2));
}

double pgf_eval(const AbsorptionDistribution& dist, std::span<const double> v) {
  double sum = 0.0;
  for (const auto& [state, p] : dist.entries()) {
    double term = to_double(p);
    for (std::size_t i = 0; i < state.colors(); ++i) {
      term *= std::pow(v[i], static_cast<double>(state[i]));
    }
    sum += term;
  }
  return sum;
}

Rational pgf_exact(const AbsorptionDistribution& dist, std::span<const Rational> v) {
  Rational sum = 0;
  for (const auto& [state, p] : dist.entries()) {
    Rational term = p;
    for (std::size_t i = 0; i < state.colors(); ++i) {
      Rational factor;
      mpz_pow_ui(factor.get_num_mpz_t(), v[i].get_num_mpz_t(), state[i]);
      mpz_pow_ui(factor.get_den_mpz_t(), v[i].get_den_mpz_t(), state[i]);
      term *= factor;
    }
    sum += term;
  }
  return sum;
}

MomentReport factorial_moments(const AbsorptionDistribution& dist, std::size_t color, int order) {
  if (order < 1) throw std::invalid_argument("moment order must be >= 1");
  MomentReport report;
  report.factorial_moments.assign(static_cast<std::size_t>(order), Rational(0));
  for (const auto& [k, p] : dist.marginal(color)) {
    BigInt falling = 1;
    for (int r = 0; r < order; ++r) {
      falling *= BigInt(k - r);
      report.factorial_moments[r] += p * Rational(falling);
    }
  }
  report.mean = report.factorial_moments[0];
  if (order >= 2) {
    report.variance =
        report.factorial_moments[1] + report.mean - report.mean * report.mean;
  } else {
    report.variance = 0;
  }
  return report;
}

MomentReport white_marginal_moments(const AbsorptionDistribution& dist, int order) {
  return factorial_moments(dist, dist.start().colors() == 2 ? kWhite : 0, order);
}

}  // namespace urns
