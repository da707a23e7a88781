#include "urns/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace urns::closed_form {

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

// Reciprocal factorial extended by 1/(-k)! = 0.
Rational inverse_factorial(Count n) {
  if (n < 0) return 0;
  return Rational(BigInt(1), factorial(static_cast<std::uint64_t>(n)));
}

double check_tolerance(const QuadratureResult& r, double guaranteed) {
  if (r.error_estimate > guaranteed) {
    throw QuadratureFailure("quadrature error estimate " + std::to_string(r.error_estimate) +
                            " exceeds " + std::to_string(guaranteed));
  }
  return r.value;
}

}  // namespace

double pills_pgf(Count n, Count m, double v) {
  require(m >= 1 && n >= 0, "pills_pgf needs m >= 1, n >= 0");
  require(v >= 0.0 && v <= 1.0, "pills_pgf needs v in [0, 1]");
  const double shift = v - 1.0;
  auto integrand = [=](double q) {
    const double logq = q > 0.0 ? std::log(q) : 0.0;
    const double first = 1.0 + shift * q;
    const double second = 1.0 - q - shift * q * logq;
    return std::pow(first, static_cast<double>(n)) * std::pow(second, static_cast<double>(m - 1));
  };
  const auto r = integrate_unit_log_endpoint(integrand);
  return static_cast<double>(m) * v * check_tolerance(r, 1e-10);
}

Rational pills_expectation(Count n, Count m) {
  require(m >= 1 && n >= 0, "pills_expectation needs m >= 1, n >= 0");
  Rational e(n, m + 1);
  e.canonicalize();
  return e + harmonic(static_cast<std::uint64_t>(m));
}

double rpills_pgf(std::span<const Count> counts, double v) {
  const std::size_t r = counts.size();
  require(r >= 3, "rpills_pgf needs r >= 3");
  require(counts[r - 1] >= 1, "rpills_pgf needs n_r >= 1");
  for (Count c : counts) require(c >= 0, "rpills_pgf needs non-negative counts");
  require(v >= 0.0 && v <= 1.0, "rpills_pgf needs v in [0, 1]");

  std::vector<double> inverse_fact(r);
  inverse_fact[0] = 1.0;
  for (std::size_t j = 1; j < r; ++j) inverse_fact[j] = inverse_fact[j - 1] / static_cast<double>(j);
  const std::vector<Count> exps(counts.begin(), counts.end());

  auto integrand = [=](double q) {
    const double logq = q > 0.0 ? std::log(q) : 0.0;
    double value = 1.0;
    // log_power = log^(j-1) q; the sign (-1)^(j-1) alternates with it.
    double log_power = 1.0;
    double sign = 1.0;
    for (std::size_t j = 1; j < r; ++j) {
      const double term = q == 0.0 ? 0.0 : sign * (1.0 - v) * q * log_power * inverse_fact[j - 1];
      value *= std::pow(1.0 - term, static_cast<double>(exps[j - 1]));
      log_power *= logq;
      sign = -sign;
    }
    const double term = q == 0.0 ? 0.0 : sign * (1.0 - v) * q * log_power * inverse_fact[r - 1];
    value *= std::pow(1.0 - q - term, static_cast<double>(exps[r - 1] - 1));
    return value;
  };
  const auto res = integrate_unit_log_endpoint(integrand);
  return static_cast<double>(counts[r - 1]) * check_tolerance(res, 1e-8);
}

Rational variant_pills_expectation(Count n, Count m) {
  require(m >= 1 && n >= 0, "variant_pills_expectation needs m >= 1, n >= 0");
  const BigInt four_m = power(BigInt(4), static_cast<std::uint64_t>(m));
  const BigInt central = binomial(2 * m, m);
  Rational slope(four_m, BigInt(2 * m + 1) * central);
  slope.canonicalize();
  Rational intercept(four_m, central);
  intercept.canonicalize();
  return slope * Rational(n) + intercept - 1;
}

Rational cannibal_pmf(Count n, Count m, Count k) {
  require(m >= 2 && n >= 0 && k >= 1, "cannibal_pmf needs m >= 2, n >= 0, k >= 1");
  // 1/(k-n-j)! vanishes for j > k-n.
  Rational outer = 0;
  for (Count j = 0; j <= k - n; ++j) {
    Rational inner = 0;
    for (Count l = 0; l <= std::min(j, m); ++l) {
      const BigInt base_power = power(BigInt(n + j), static_cast<std::uint64_t>(m - l));
      Rational term(binomial(m, l) * base_power);
      term *= inverse_factorial(j - l);
      if (l % 2) term = -term;
      inner += term;
    }
    Rational term = inner * inverse_factorial(k - n - j);
    outer += (j % 2) ? -term : term;
  }
  Rational scale(factorial(static_cast<std::uint64_t>(k - 1)),
                 factorial(static_cast<std::uint64_t>(n + m - 1)));
  scale.canonicalize();
  return scale * outer;
}

Rational okcorral_survive_prob(Count n, Count m) {
  require(n >= 1 && m >= 1, "okcorral_survive_prob needs n, m >= 1");
  const auto total = static_cast<std::uint64_t>(n + m);
  BigInt numerator = 0;
  for (Count r = 1; r <= n; ++r) {
    BigInt term = binomial(n + m, n - r) * power(BigInt(r), total);
    if ((n - r) % 2) numerator -= term;
    else numerator += term;
  }
  Rational p(numerator, factorial(total));
  p.canonicalize();
  return p;
}

Rational okcorral_survivor_pmf(Count n, Count m, Count k) {
  require(n >= 1 && m >= 1, "okcorral_survivor_pmf needs n, m >= 1");
  require(k >= 1 && k <= n, "okcorral_survivor_pmf needs 1 <= k <= n");
  BigInt numerator = 0;
  for (Count r = 1; r <= n; ++r) {
    BigInt term = binomial(n + m, n - r) * binomial(r - 1, k - 1) *
                  power(BigInt(r), static_cast<std::uint64_t>(n + m - k));
    if ((n - r) % 2) numerator -= term;
    else numerator += term;
  }
  Rational p(numerator * factorial(static_cast<std::uint64_t>(k)),
             factorial(static_cast<std::uint64_t>(n + m)));
  p.canonicalize();
  return p;
}

Rational sampling_survive_prob(Count n, Count m) {
  require(n >= 1 && m >= 1, "sampling_survive_prob needs n, m >= 1");
  Rational p(n, n + m);
  p.canonicalize();
  return p;
}

Rational sampling_pmf(Count n, Count m, Count k) {
  require(n >= 1 && m >= 1, "sampling_pmf needs n, m >= 1");
  require(k >= 1 && k <= n, "sampling_pmf needs 1 <= k <= n");
  Rational p(binomial(m - 1 + n - k, m - 1), binomial(m + n, m));
  p.canonicalize();
  return p;
}

}  // namespace urns::closed_form
