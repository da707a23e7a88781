#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "urns/exact_dp.hpp"

// Path-by-path enumeration of the absorption law. When every draw weight is
// a ratio of integers <= 12, a path weight is a product of powers of
// 2, 3, 5, 7 and 11, tracked as a packed exponent vector so each step costs
// one integer addition; paths are tallied per (absorbing state, weight) and
// turned into rationals once at the end. Other models fall back to carrying
// an exact rational per path.

namespace urns {

namespace {

constexpr std::array<unsigned long, 5> kPrimes = {2, 3, 5, 7, 11};
constexpr int kFieldBits = 12;
constexpr std::int64_t kFieldOffset = std::int64_t{1} << (kFieldBits - 1);
constexpr Count kLargestFactorable = 12;

std::int64_t exponent_key(Count x) {
  std::int64_t key = 0;
  for (std::size_t i = 0; i < kPrimes.size(); ++i) {
    while (x % static_cast<Count>(kPrimes[i]) == 0) {
      x /= static_cast<Count>(kPrimes[i]);
      key += std::int64_t{1} << (kFieldBits * i);
    }
  }
  return key;
}

std::int64_t base_key() {
  std::int64_t key = 0;
  for (std::size_t i = 0; i < kPrimes.size(); ++i) key += kFieldOffset << (kFieldBits * i);
  return key;
}

Rational key_to_weight(std::int64_t key) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < kPrimes.size(); ++i) {
    const std::int64_t field = (key >> (kFieldBits * i)) & ((std::int64_t{1} << kFieldBits) - 1);
    const std::int64_t e = field - kFieldOffset;
    if (e > 0) num *= power(BigInt(kPrimes[i]), static_cast<std::uint64_t>(e));
    if (e < 0) den *= power(BigInt(kPrimes[i]), static_cast<std::uint64_t>(-e));
  }
  Rational w(num, den);
  w.canonicalize();
  return w;
}

struct Edge {
  std::int64_t delta;
  std::uint32_t to;
  bool to_absorbing;
};

// Edges of node u are edges[first[u] .. first[u + 1]).
struct PathGraph {
  std::vector<State> states;
  std::vector<std::uint8_t> absorbing;
  std::vector<std::uint32_t> first;
  std::vector<Edge> edges;
};

// nullopt when some draw weight does not factor over the small primes.
std::optional<PathGraph> build_graph(const UrnSpec& spec, const State& start) {
  PathGraph g;
  std::vector<std::vector<Edge>> adjacency;
  std::unordered_map<State, std::uint32_t, StateHash> index;
  auto intern = [&](const State& s) {
    auto [it, inserted] = index.try_emplace(s, static_cast<std::uint32_t>(g.states.size()));
    if (inserted) {
      g.states.push_back(s);
      g.absorbing.push_back(is_absorbing(spec, s));
      adjacency.emplace_back();
    }
    return it->second;
  };
  intern(start);
  for (std::size_t u = 0; u < g.states.size(); ++u) {
    if (g.absorbing[u]) continue;
    for (const auto& o : step_outcomes(spec, g.states[u])) {
      if (o.weight.get_num() > kLargestFactorable || o.weight.get_den() > kLargestFactorable) {
        return std::nullopt;
      }
      const std::int64_t delta = exponent_key(o.weight.get_num().get_si()) -
                                 exponent_key(o.weight.get_den().get_si());
      const std::uint32_t v = intern(o.next);
      adjacency[u].push_back({delta, v, false});
    }
  }
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    g.first.push_back(static_cast<std::uint32_t>(g.edges.size()));
    for (Edge e : adjacency[u]) {
      e.to_absorbing = g.absorbing[e.to] != 0;
      g.edges.push_back(e);
    }
  }
  g.first.push_back(static_cast<std::uint32_t>(g.edges.size()));
  return g;
}

// Open-addressing counter keyed by (absorbing node, weight key).
class Tally {
 public:
  Tally() : slots_(1024) {}

  void add(std::uint32_t node, std::int64_t key) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(node, key) & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.count && s.key == key && s.node == node) {
        ++s.count;
        return;
      }
      if (s.count == 0) break;
    }
    if (2 * (used_ + 1) > slots_.size()) grow();
    insert(node, key, 1);
  }

  std::size_t size() const { return used_; }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& s : slots_) {
      if (s.count) f(s.node, s.key, s.count);
    }
  }

 private:
  struct Slot {
    std::int64_t key = 0;
    std::uint32_t node = 0;
    std::uint64_t count = 0;
  };

  static std::size_t hash(std::uint32_t node, std::int64_t key) {
    std::uint64_t x = static_cast<std::uint64_t>(key) ^ (std::uint64_t{node} * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return static_cast<std::size_t>(x);
  }

  void insert(std::uint32_t node, std::int64_t key, std::uint64_t count) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(node, key) & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.count == 0) {
        s = {key, node, count};
        ++used_;
        return;
      }
      if (s.key == key && s.node == node) {
        s.count += count;
        return;
      }
    }
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    used_ = 0;
    for (const auto& s : old) {
      if (s.count) insert(s.node, s.key, s.count);
    }
  }

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

// u is not absorbing.
void walk(const PathGraph& g, std::uint32_t u, std::int64_t key, std::size_t depth, Tally& tally) {
  // A simple path visits each state at most once.
  if (depth > g.states.size()) throw NonTerminatingError("path enumeration found a cycle");
  const Edge* e = g.edges.data() + g.first[u];
  const Edge* end = g.edges.data() + g.first[u + 1];
  for (; e != end; ++e) {
    if (e->to_absorbing) tally.add(e->to, key + e->delta);
    else walk(g, e->to, key + e->delta, depth + 1, tally);
  }
}

void walk_rational(const UrnSpec& spec, const State& s, const Rational& weight,
                   std::map<State, Rational>& out, std::size_t depth) {
  if (is_absorbing(spec, s)) {
    out[s] += weight;
    return;
  }
  if (depth > 100000) throw NonTerminatingError("path enumeration exceeded depth budget");
  for (const auto& o : step_outcomes(spec, s)) {
    walk_rational(spec, o.next, weight * o.weight, out, depth + 1);
  }
}

}  // namespace

AbsorptionDistribution enumerate_paths_oracle(const UrnSpec& spec, const State& start,
                                              Count ball_cap) {
  check_state(spec, start);
  if (start.total() > ball_cap) {
    throw CapExceededError("start has " + std::to_string(start.total()) +
                           " balls, enumeration cap is " + std::to_string(ball_cap));
  }
  std::map<State, Rational> out;
  if (auto graph = build_graph(spec, start)) {
    Tally tally;
    if (graph->absorbing[0]) tally.add(0, base_key());
    else walk(*graph, 0, base_key(), 0, tally);
    tally.for_each([&](std::uint32_t node, std::int64_t key, std::uint64_t count) {
      out[graph->states[node]] += Rational(BigInt(static_cast<unsigned long>(count))) *
                                  key_to_weight(key);
    });
  } else {
    walk_rational(spec, start, Rational(1), out, 0);
  }
  return AbsorptionDistribution(start, std::move(out));
}

}  // namespace urns
