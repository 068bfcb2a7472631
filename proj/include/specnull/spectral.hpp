#pragma once

#include <utility>

#include <Eigen/Dense>

#include "specnull/autocorrelation.hpp"
#include "specnull/common.hpp"

namespace specnull {

// Sampled power spectral density H(omega) on an ascending grid in
// [0, pi]. Approximate autocorrelations can yield slightly negative
// values; those are flagged, never clamped.
struct SpectrumCurve {
  Eigen::ArrayXd omegas;
  Eigen::ArrayXd values;
  Method method = Method::Exact;
  bool has_nonpositive = false;
};

// Uniform grid of `points` frequencies on (0, pi], omega = 0 excluded.
Eigen::ArrayXd default_grid(int points = 4096);

// H(omega) = 1 + 2 sum_{i=1..n-1} rho(i) cos(i omega).
SpectrumCurve spectrum_from_autocorrelation(const Autocorrelation& rho,
                                            const Eigen::ArrayXd& omegas);

// chi = (1/12) sum i^4 rho(i).
double lfsw_from_autocorrelation(const Autocorrelation& rho);

struct NullReport {
  int order = 2;
  double a0 = 0.0;  // sum rho + 1/2
  double a1 = 0.0;  // sum i^2 rho (order 2 only)
  double tol = 0.0;
  bool pass = false;
};

// order 1 checks a0 only; order 2 checks both residuals against tol.
NullReport verify_null_conditions(const Autocorrelation& rho, int order, double tol);

// Pointwise 10*log10(num/den). Grids must match; points where either
// curve is <= 1e-300 are emitted as NaN and counted in `excluded`.
struct RatioCurve {
  Eigen::ArrayXd omegas;
  Eigen::ArrayXd db;
  int excluded = 0;
};

RatioCurve db_ratio(const SpectrumCurve& num, const SpectrumCurve& den);

// Maximum information rates at the asymptotic codebook sizes:
//   R  = 1 - (1/n)  log2(pi n^2 / (4 sqrt 3))     (dc^2, n mod 4 = 0)
//   R1 = 1 - (1/2n1) log2(pi n1 / 2)              (dc, n1 even)
double rate_dc2(int n);
double rate_dc(int n1);

// Smallest even n1 and smallest n = 0 (mod 4) whose rates reach the
// target. Requires 0 < rate_target < 1.
std::pair<int, int> match_lengths(double rate_target);

struct Intersection {
  double omega_cross = 0.0;
  double level_db = 0.0;
};

// First omega in (0, pi) where H_1(omega) - H(omega) changes sign on a
// 10^4-point scan, refined by bisection to |d omega| < 1e-10. level_db
// is the common spectrum level there.
Intersection find_intersection(int n1, const Autocorrelation& rho_dc2);

// Equal-rate design point: matched lengths plus the intersection of
// H_1(n1) with the corrected-cubic dc^2 spectrum.
struct DesignPoint {
  double rate_target = 0.0;
  int n1 = 0;
  int n = 0;
  double omega_cross = 0.0;
  double level_db = 0.0;
};

DesignPoint design_point(double rate_target);

}  // namespace specnull
