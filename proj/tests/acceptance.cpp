// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "urns/closed_form.hpp"
#include "urns/exact_dp.hpp"
#include "urns/limit_check.hpp"
#include "urns/montecarlo.hpp"
#include "urns/presets.hpp"

using namespace urns;
namespace cf = urns::closed_form;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

constexpr double kPgfTolerance = 1e-8;
constexpr double kKsCeiling = 0.12;
constexpr double kSigmaBand = 4.0;
constexpr std::uint64_t kReplications = 100000;

void fig1_path(Verdict& out) {
  const std::vector<State> path = {{6, 1}, {5, 2}, {5, 1}, {5, 0}, {4, 1}, {4, 0},
                                   {3, 1}, {2, 2}, {1, 3}, {1, 2}, {1, 1}, {0, 2}};
  const Rational w = path_weight(presets::pills(), path);
  out.detail << "weight " << to_fraction_string(w);
  if (w != q(3, 3920)) out.fail(" != 3/3920");
}

void pills_expectation(Verdict& out) {
  int checked = 0;
  for (Count m = 1; m <= 30; ++m) {
    for (Count n = 0; n <= 30; ++n, ++checked) {
      const auto d = absorption_distribution(presets::pills(), State{m, n});
      if (white_marginal_moments(d, 1).mean != cf::pills_expectation(n, m)) {
        out.fail("mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  if (out.pass) out.detail << checked << " starts exact";
}

void pills_pgf(Verdict& out) {
  double worst = 0.0;
  int checked = 0;
  for (Count m = 1; m <= 15; ++m) {
    for (Count n = 0; n + m <= 15; ++n) {
      const auto d = absorption_distribution(presets::pills(), State{m, n});
      for (double v : {0.25, 0.5, 0.75}) {
        worst = std::max(worst, std::abs(cf::pills_pgf(n, m, v) - pgf_eval(d, 1.0, v)));
        ++checked;
      }
    }
  }
  out.detail << checked << " evaluations, max |diff| " << worst;
  if (!(worst <= kPgfTolerance)) out.fail(" > 1e-8");
}

void rpills_pgf(Verdict& out) {
  const UrnSpec spec = presets::rpills(3);
  double worst = 0.0;
  int checked = 0;
  for (Count n1 = 0; n1 <= 6; ++n1) {
    for (Count n2 = 0; n2 <= 6; ++n2) {
      for (Count n3 = 1; n3 <= 6; ++n3) {
        const auto d = absorption_distribution(spec, State{n1, n2, n3});
        const std::vector<Count> counts = {n1, n2, n3};
        for (double v : {0.25, 0.5, 0.75}) {
          const double point[3] = {v, 1.0, 1.0};
          worst = std::max(worst, std::abs(cf::rpills_pgf(counts, v) - pgf_eval(d, point)));
          ++checked;
        }
      }
    }
  }
  out.detail << checked << " evaluations, max |diff| " << worst;
  if (!(worst <= kPgfTolerance)) out.fail(" > 1e-8");
}

void variant_expectation(Verdict& out) {
  int checked = 0;
  for (Count m = 1; m <= 15; ++m) {
    for (Count n = 0; n <= 15; ++n, ++checked) {
      const auto d = absorption_distribution(presets::pills_variant(), State{2 * m, n});
      if (white_marginal_moments(d, 1).mean != cf::variant_pills_expectation(n, m)) {
        out.fail("mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  if (out.pass) out.detail << checked << " starts exact";
}

void cannibal_pmf(Verdict& out) {
  int checked = 0;
  for (Count m = 2; m <= 20; ++m) {
    for (Count n = 0; n + m <= 20; ++n) {
      const auto marginal =
          absorption_distribution(presets::cannibal(), State{m, n}).marginal(kWhite);
      Rational sum = 0;
      for (Count k = 1; k <= n + m; ++k) {
        const Rational p = cf::cannibal_pmf(n, m, k);
        sum += p;
        const auto it = marginal.find(k);
        if (p != (it == marginal.end() ? Rational(0) : it->second)) {
          out.fail("mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " k=" + std::to_string(k));
        }
        ++checked;
      }
      if (marginal.count(0)) out.fail("DP puts mass on k=0");
      if (sum != 1) out.fail("pmf does not sum to 1 at n=" + std::to_string(n));
    }
  }
  if (out.pass) out.detail << checked << " probabilities exact, all normalized";
}

void okcorral(Verdict& out) {
  int checked = 0;
  for (Count n = 1; n <= 19; ++n) {
    for (Count m = 1; n + m <= 20; ++m) {
      const auto d = absorption_distribution(presets::okcorral(), State{m, n});
      Rational white_wins = 0;
      Rational pmf_sum = 0;
      for (Count k = 1; k <= n; ++k) {
        const Rational exact = d.probability(State{0, k});
        white_wins += exact;
        const Rational formula = cf::okcorral_survivor_pmf(n, m, k);
        pmf_sum += formula;
        if (formula != exact) out.fail("survivor pmf mismatch n=" + std::to_string(n));
        ++checked;
      }
      const Rational p = cf::okcorral_survive_prob(n, m);
      if (p != white_wins) out.fail("survival mismatch n=" + std::to_string(n));
      if (p + cf::okcorral_survive_prob(m, n) != 1) out.fail("p(n,m)+p(m,n) != 1");
      if (pmf_sum != p) out.fail("sum of pmf != survival probability");
    }
  }
  if (out.pass) out.detail << checked << " survivor probabilities exact";
}

void sampling(Verdict& out) {
  int checked = 0;
  for (Count n = 1; n <= 29; ++n) {
    for (Count m = 1; n + m <= 30; ++m) {
      const auto d = absorption_distribution(presets::sampling(), State{m, n});
      Rational white_wins = 0;
      for (Count k = 1; k <= n; ++k) {
        const Rational exact = d.probability(State{0, k});
        white_wins += exact;
        if (cf::sampling_pmf(n, m, k) != exact) out.fail("pmf mismatch n=" + std::to_string(n));
        ++checked;
      }
      if (cf::sampling_survive_prob(n, m) != white_wins) out.fail("survival mismatch");
    }
  }
  if (out.pass) out.detail << checked << " probabilities exact";
}

void brute_force(Verdict& out) {
  int checked = 0;
  for (const auto& name : presets::names()) {
    const UrnSpec spec = presets::by_name(name);
    const std::size_t r = spec.colors();
    std::vector<Count> counts(r, 0);
    // Odometer over all count vectors with total <= 10.
    while (true) {
      const State s(counts);
      if (enumerate_paths_oracle(spec, s, 10) != absorption_distribution(spec, s)) {
        out.fail(name + " differs at (" + s.to_string() + ")");
      }
      ++checked;
      std::size_t pos = 0;
      while (pos < r) {
        ++counts[pos];
        if (State(counts).total() <= 10) break;
        counts[pos++] = 0;
      }
      if (pos == r) break;
    }
  }
  if (out.pass) out.detail << checked << " (preset, start) pairs identical";
}

void limit_laws(Verdict& out) {
  struct Case {
    const char* model;
    const char* scaling;
    std::vector<Count> sizes;
  };
  const std::vector<Case> cases = {{"pills", "exponential", {20, 200}},
                                   {"pills", "beta", {20, 200}},
                                   {"pills-variant", "rayleigh", {20, 100}},
                                   {"pills-variant", "sqrtbeta", {20, 200}},
                                   {"cannibal", "normal", {40, 120}}};
  for (const auto& c : cases) {
    const auto check = run_limit_check(c.model, c.scaling, c.sizes);
    const double first = check.points.front().ks;
    const double last = check.points.back().ks;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s/%s %.4f->%.4f", out.detail.tellp() > 0 ? "; " : "",
                  c.model, c.scaling, first, last);
    out.detail << buf;
    if (!check.decreasing) {
      out.pass = false;
      out.detail << " (not decreasing)";
    }
    if (!(last < kKsCeiling)) {
      out.pass = false;
      out.detail << " (>= 0.12)";
    }
  }
}

void monte_carlo(Verdict& out) {
  const std::vector<std::pair<std::string, State>> cases = {
      {"pills", State{3, 2}},          {"rpills:3", State{1, 2, 2}},
      {"pills-variant", State{4, 2}},  {"cannibal", State{4, 2}},
      {"cannibal-unmodified", State{4, 2}}, {"okcorral", State{3, 3}},
      {"sampling", State{3, 2}}};
  double worst_sigma = 0.0;
  std::uint64_t seed = 20080401;
  for (const auto& [name, start] : cases) {
    const UrnSpec spec = presets::by_name(name);
    const auto exact = absorption_distribution(spec, start);
    const SimConfig cfg{spec, start, kReplications, seed++};
    const auto sim = run_batch(cfg);
    if (!(sim == run_batch(cfg, 1)) || !(sim == run_batch(cfg, 5))) {
      out.fail(name + ": counts differ between reruns");
    }
    for (const auto& [s, n] : sim.counts()) {
      if (exact.probability(s) == 0) out.fail(name + ": simulated state outside exact support");
    }
    for (const auto& [s, p_exact] : exact.entries()) {
      const double p = to_double(p_exact);
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(kReplications));
      const double diff = std::abs(sim.frequency(s) - p);
      if (sigma > 0.0) worst_sigma = std::max(worst_sigma, diff / sigma);
      if (diff > kSigmaBand * sigma) {
        out.fail(name + ": state (" + s.to_string() + ") outside 4 sigma");
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s7 presets x 1e5 reps, worst deviation %.2f sigma",
                out.pass ? "" : "; ", worst_sigma);
  out.detail << buf;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "figure path weight is 3/3920", fig1_path},
      {2, "pills DP mean = n/(m+1) + H_m, m,n <= 30", pills_expectation},
      {3, "pills pgf integral vs DP within 1e-8, m+n <= 15", pills_pgf},
      {4, "3-size pills pgf integral vs DP within 1e-8, n_i <= 6", rpills_pgf},
      {5, "variant pills mean formula vs DP, m,n <= 15", variant_expectation},
      {6, "cannibal pmf double sum vs DP, n+m <= 20", cannibal_pmf},
      {7, "OK Corral survival and survivor formulas vs DP, n+m <= 20", okcorral},
      {8, "sampling without replacement formulas vs DP, n+m <= 30", sampling},
      {9, "DP equals exhaustive path enumeration, total <= 10", brute_force},
      {10, "limit laws: KS decreases and ends below 0.12", limit_laws},
      {11, "Monte Carlo within 4 sigma of DP, reproducible", monte_carlo},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %s -- %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
