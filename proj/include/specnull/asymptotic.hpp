#pragma once

#include <utility>

#include "specnull/autocorrelation.hpp"
#include "specnull/common.hpp"

namespace specnull {

// Exact closed-form correction for the cubic autocorrelation:
//   a = -(6n^2 - n + 2) / (2(n-2)n^3)    ~ -3/n^2
//   b =  (4n^3 - 2n^2 + n - 2) / (n^4 (n-1)(n-2))  ~ 4/n^3
struct CubicCorrection {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
};

CubicCorrection cubic_correction(int n);

// rho(i) ~ (2/n^4)(n - i)(i^2 + i n - n^2), uncorrected.
Autocorrelation cubic_autocorrelation(int n);

// rho'(i) = cubic + a + b*i with the closed-form CubicCorrection; the
// null-condition checks vanish by construction.
Autocorrelation corrected_cubic_autocorrelation(int n);

// LFSW of the corrected cubic: {finite sum (1/12) sum i^4 rho'(i),
// asymptote (n^4/720)(1 + 4/n)}.
std::pair<double, double> lfsw_dc2(int n);

// Prior-art parabola rho_a(i) = beta (i + alpha)(i - n) with
//   alpha = -(3n^2 - 2)/(5n),  beta = -15/[(n-1)(n-2)(4n+3)].
struct PriorArtParams {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

PriorArtParams prior_art_params(int n);
Autocorrelation prior_art_autocorrelation(int n);

// 4*sqrt(3)*2^n/(pi n^2), times (1 - 1.211/n) when refined. The 2^n
// is applied through the floating exponent; overflow past double
// range raises domain_error.
double approx_count_dc2(int n, bool refined);

}  // namespace specnull
