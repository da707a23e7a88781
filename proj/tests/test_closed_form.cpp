#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "urns/closed_form.hpp"
#include "urns/exact_dp.hpp"
#include "urns/presets.hpp"

using namespace urns;
namespace cf = urns::closed_form;

namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("pills_pgf") {
  for (double v : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    CHECK(std::abs(cf::pills_pgf(0, 1, v) - v) <= 1e-12);
  }
  for (Count n : {0, 3, 9}) {
    for (Count m : {1, 2, 7}) CHECK(std::abs(cf::pills_pgf(n, m, 1.0) - 1.0) <= 1e-10);
  }
  CHECK(std::abs(cf::pills_pgf(1, 1, 0.5) - 0.375) <= 1e-10);
  CHECK_THROWS(cf::pills_pgf(1, 0, 0.5));
  CHECK_THROWS(cf::pills_pgf(1, 1, 1.5));
}

TEST_CASE("pills_pgf agrees with the solver") {
  for (Count m = 1; m <= 8; ++m) {
    for (Count n = 0; n + m <= 10; ++n) {
      const auto d = absorption_distribution(presets::pills(), State{m, n});
      for (double v : {0.25, 0.5, 0.75}) {
        CHECK(std::abs(cf::pills_pgf(n, m, v) - pgf_eval(d, 1.0, v)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("pills_expectation") {
  CHECK(cf::pills_expectation(0, 1) == 1);
  CHECK(cf::pills_expectation(1, 1) == q(3, 2));
  for (Count m = 1; m <= 20; ++m) CHECK(cf::pills_expectation(0, m) == oracle::harmonic(m));
}

TEST_CASE("rpills_pgf") {
  const std::vector<Count> one_big = {0, 0, 1};
  const std::vector<Count> two = {0, 1, 1};
  for (double v : {0.0, 0.3, 1.0}) {
    // The size-3 pill ends as a size-2 pill with no single-unit pill left.
    CHECK(std::abs(cf::rpills_pgf(one_big, v) - 1.0) <= 1e-12);
    // Hand enumeration: (3/4) + v/4.
    CHECK(std::abs(cf::rpills_pgf(two, v) - (0.75 + 0.25 * v)) <= 1e-10);
  }
  const std::vector<Count> mixed = {2, 3, 4};
  CHECK(std::abs(cf::rpills_pgf(mixed, 1.0) - 1.0) <= 1e-10);
  const std::vector<Count> r4 = {1, 2, 1, 2};
  CHECK(std::abs(cf::rpills_pgf(r4, 1.0) - 1.0) <= 1e-10);

  const std::vector<Count> ones = {1, 1, 1};
  const auto d = absorption_distribution(presets::rpills(3), State{1, 1, 1});
  const double v3[3] = {0.5, 1.0, 1.0};
  CHECK(std::abs(cf::rpills_pgf(ones, 0.5) - pgf_eval(d, v3)) <= 1e-8);

  const std::vector<Count> four = {1, 0, 2, 1};
  const auto d4 = absorption_distribution(presets::rpills(4), State{1, 0, 2, 1});
  const double v4[4] = {0.25, 1.0, 1.0, 1.0};
  CHECK(std::abs(cf::rpills_pgf(four, 0.25) - pgf_eval(d4, v4)) <= 1e-8);

  const std::vector<Count> no_top = {1, 1, 0};
  CHECK_THROWS(cf::rpills_pgf(no_top, 0.5));
  const std::vector<Count> two_colors = {1, 1};
  CHECK_THROWS(cf::rpills_pgf(two_colors, 0.5));
}

TEST_CASE("variant_pills_expectation") {
  CHECK(cf::variant_pills_expectation(0, 1) == 1);
  CHECK(cf::variant_pills_expectation(1, 1) == q(5, 3));
  CHECK(cf::variant_pills_expectation(0, 2) == q(5, 3));
  for (Count m = 1; m <= 6; ++m) {
    for (Count n = 0; n <= 6; ++n) {
      const auto d = absorption_distribution(presets::pills_variant(), State{2 * m, n});
      CHECK(cf::variant_pills_expectation(n, m) == white_marginal_moments(d, 1).mean);
    }
  }
}

TEST_CASE("cannibal_pmf") {
  CHECK(cf::cannibal_pmf(0, 2, 1) == 1);
  CHECK(cf::cannibal_pmf(1, 2, 1) == q(1, 2));
  CHECK(cf::cannibal_pmf(1, 2, 2) == q(1, 2));
  for (Count m = 2; m <= 12; ++m) {
    for (Count n = 0; n + m <= 12; ++n) {
      Rational sum = 0;
      for (Count k = 1; k <= n + m; ++k) {
        const Rational p = cf::cannibal_pmf(n, m, k);
        CHECK(p >= 0);
        CHECK(p <= 1);
        sum += p;
      }
      CHECK_MESSAGE(sum == 1, "n=" << n << " m=" << m);
    }
  }
  oracle::Recurrence reference(oracle::cannibal());
  for (Count m = 2; m <= 9; ++m) {
    for (Count n = 0; n <= 6; ++n) {
      const auto law = reference.white(n, m);
      for (Count k = 1; k <= n + m; ++k) {
        const auto it = law.find(k);
        CHECK(cf::cannibal_pmf(n, m, k) == (it == law.end() ? Rational(0) : it->second));
      }
    }
  }
  CHECK_THROWS(cf::cannibal_pmf(1, 1, 1));
}

TEST_CASE("okcorral formulas") {
  CHECK(cf::okcorral_survive_prob(1, 1) == q(1, 2));
  CHECK(cf::okcorral_survive_prob(2, 1) == q(5, 6));
  CHECK(cf::okcorral_survivor_pmf(1, 1, 1) == q(1, 2));
  CHECK(cf::okcorral_survivor_pmf(2, 1, 2) == q(2, 3));
  for (Count n = 1; n <= 19; ++n) {
    for (Count m = 1; n + m <= 20; ++m) {
      CHECK(cf::okcorral_survive_prob(n, m) + cf::okcorral_survive_prob(m, n) == 1);
      Rational sum = 0;
      for (Count k = 1; k <= n; ++k) sum += cf::okcorral_survivor_pmf(n, m, k);
      CHECK(sum == cf::okcorral_survive_prob(n, m));
    }
  }
  CHECK_THROWS(cf::okcorral_survivor_pmf(2, 1, 3));
  CHECK_THROWS(cf::okcorral_survive_prob(0, 1));
}

TEST_CASE("sampling formulas") {
  CHECK(cf::sampling_survive_prob(1, 1) == q(1, 2));
  CHECK(cf::sampling_pmf(2, 1, 1) == q(1, 3));
  CHECK(cf::sampling_pmf(2, 1, 2) == q(1, 3));
  for (Count n = 1; n <= 29; ++n) {
    for (Count m = 1; n + m <= 30; ++m) {
      Rational sum = 0;
      for (Count k = 1; k <= n; ++k) sum += cf::sampling_pmf(n, m, k);
      CHECK(sum == q(n, n + m));
    }
  }
  CHECK_THROWS(cf::sampling_pmf(2, 1, 0));
}

TEST_CASE("quadrature reports failure when the budget is too small") {
  QuadratureOptions tight;
  tight.max_panels = 3;
  tight.abs_tolerance = 1e-15;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight),
                  QuadratureFailure);
  const auto r = integrate_unit_log_endpoint([](double x) { return x > 0 ? -std::log(x) : 0.0; });
  CHECK(std::abs(r.value - 1.0) <= 1e-11);
}
