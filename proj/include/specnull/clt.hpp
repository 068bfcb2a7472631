#pragma once

#include "specnull/autocorrelation.hpp"
#include "specnull/common.hpp"

namespace specnull {

// Per-pair scalars of the bivariate Gaussian counting model. All the
// polynomial numerators (gamma, delta, the r1/r2 numerators) are exact
// 64-bit integers before the single floating division.
struct CltIntermediates {
  int n = 0;
  int i0 = 0;
  int i1 = 0;
  double mu_c = 0.0;
  double mu_p = 0.0;
  double sigma_c2 = 0.0;
  double sigma_p2 = 0.0;
  double gauss_r2 = 0.0;  // squared correlation coefficient of (c, p)
  double gamma = 0.0;
  double delta = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double phi1_sq = 0.0;
  double phi2 = 0.0;
};

// Requires n >= 4, 1 <= i0, i1 <= n, i0 != i1.
CltIntermediates clt_intermediates(int n, int i0, int i1);

// r(i0, i1) = (1 + r1)^{-1/2} exp(-(8/n)(1 + r2)/(1 + r1)) - 1.
// Invariant under (i0, i1) -> (n+1-i0, n+1-i1), bit-exact.
// Throws domain_error when 1 + r1 <= 0 (approximation breakdown).
double clt_pair_correlation(int n, int i0, int i1);

// rho(i) = (1/n) sum_{j=1..n-i} r(j, j+i). Requires n mod 4 = 0,
// n >= 8.
Autocorrelation clt_autocorrelation(int n);

// clt_autocorrelation plus the affine correction restoring both null
// conditions.
Autocorrelation corrected_clt_autocorrelation(int n);

}  // namespace specnull
