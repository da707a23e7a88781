#pragma once

#include <cstdint>
#include <span>

#include "urns/quadrature.hpp"
#include "urns/rational.hpp"
#include "urns/urn.hpp"

// Explicit formulas for the solvable diminishing urns, written independently
// of the dynamic-programming solver so the two can check each other.
// Arguments follow (n white, m black) unless stated otherwise.
namespace urns::closed_form {

// Pills urn pgf of the remaining single-unit pills:
//   h(v) = m v int_0^1 (1 + (v-1) q)^n (1 - q - (v-1) q log q)^(m-1) dq.
// m >= 1, n >= 0, v in [0, 1]; absolute error <= 1e-10.
double pills_pgf(Count n, Count m, double v);

// E(X) = n/(m+1) + H_m.
Rational pills_expectation(Count n, Count m);

// r-size pills pgf, counts = (n_1, ..., n_r), r >= 3, n_r >= 1:
//   n_r int_0^1 prod_{j<r} (1 - (-1)^(j-1) (1-v) q log^(j-1) q / (j-1)!)^(n_j)
//             * (1 - q - (-1)^(r-1) (1-v) q log^(r-1) q / (r-1)!)^(n_r - 1) dq.
// Absolute error <= 1e-8.
double rpills_pgf(std::span<const Count> counts, double v);

// Variant pills urn with 2m black balls:
//   E(X) = 4^m n / ((2m+1) C(2m,m)) + 4^m / C(2m,m) - 1,  m >= 1.
Rational variant_pills_expectation(Count n, Count m);

// Cannibal urn, n cannibals and m >= 2 non-cannibals, P{X = k} for k >= 1:
//   (k-1)!/(n+m-1)! sum_j (-1)^j/(k-n-j)! sum_l C(m,l) (-1)^l (n+j)^(m-l)/(j-l)!
// with 1/(negative)! = 0 and 0^0 = 1.
Rational cannibal_pmf(Count n, Count m, Count k);

// OK Corral, n white and m black gunmen: probability that the white side wins.
Rational okcorral_survive_prob(Count n, Count m);
// Probability that the white side wins with exactly k survivors, 1 <= k <= n.
Rational okcorral_survivor_pmf(Count n, Count m, Count k);

// Sampling without replacement: p = n/(n+m) and
// P{X = k} = C(m-1+n-k, m-1) / C(m+n, m), 1 <= k <= n.
Rational sampling_survive_prob(Count n, Count m);
Rational sampling_pmf(Count n, Count m, Count k);

}  // namespace urns::closed_form
