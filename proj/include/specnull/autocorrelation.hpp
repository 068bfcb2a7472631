#pragma once

#include <Eigen/Dense>

#include "specnull/common.hpp"

namespace specnull {

// Autocorrelation sequence rho(1..n-1) of a length-n block code,
// tagged with the method that produced it. Storage is 0-based;
// at(i) takes the 1-based lag.
struct Autocorrelation {
  int n = 0;
  Eigen::VectorXd values;  // values[i-1] = rho(i)
  Method method = Method::Exact;

  double at(int i) const { return values[i - 1]; }
  int lags() const { return n - 1; }
};

// Validates and wraps: values must have n-1 finite entries.
Autocorrelation make_autocorrelation(int n, Eigen::VectorXd values, Method method);

// Residuals of the second-order null conditions:
//   a0 = sum rho(i) + 1/2,  a1 = sum i^2 rho(i).
struct NullChecks {
  double a0 = 0.0;
  double a1 = 0.0;
};

NullChecks compute_checks(const Autocorrelation& rho);

// Affine correction rho(i) + a + b*i chosen so that both null-condition
// checks vanish.
struct CorrectionFit {
  int n = 0;
  double a0 = 0.0;
  double a1 = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Closed-form solution of the 2x2 system:
//   a = -3 [n(n-1)a0 - 2a1] / [n(n-1)(n-2)]
//   b =  2 [n(2n-1)a0 - 6a1] / [n^2(n-1)(n-2)]
CorrectionFit correction_coefficients(int n, double a0, double a1);

Autocorrelation apply_correction(const Autocorrelation& rho, const CorrectionFit& fit,
                                 Method new_method);

}  // namespace specnull
