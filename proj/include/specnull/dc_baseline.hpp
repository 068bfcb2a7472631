#pragma once

#include <gmpxx.h>

#include "specnull/autocorrelation.hpp"
#include "specnull/common.hpp"

namespace specnull {

// Codeword count of a full-set dc-balanced code of even length n1:
// exact central binomial C(n1, n1/2) and the 2^{n1}/sqrt(pi n1/2)
// asymptote.
struct DcCount {
  mpz_class exact;
  double asymptotic = 0.0;
};

DcCount count_dc(int n1);

// rho_1(i) = (i - n1) / (n1 (n1 - 1)), i = 1..n1-1.
Autocorrelation autocorrelation_dc(int n1);

// H_1(omega) = (n1/(n1-1)) {1 - [sin(n1 w/2)/(n1 sin(w/2))]^2};
// returns the analytic limit 0 at (and near) omega = 0.
double spectrum_dc_closed_form(int n1, double omega);

// chi_1 = n1 (n1 + 1) / 12.
double lfsw_dc(int n1);

}  // namespace specnull
