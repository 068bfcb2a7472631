#include "specnull/dc_baseline.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace specnull {

DcCount count_dc(int n1) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("dc-balanced count needs even n1 >= 2");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n1),
               static_cast<unsigned long>(n1 / 2));
  const double asym = std::ldexp(1.0 / std::sqrt(std::numbers::pi * n1 / 2.0), n1);
  return DcCount{std::move(binom), asym};
}

Autocorrelation autocorrelation_dc(int n1) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("dc-balanced autocorrelation needs even n1 >= 2");
  Eigen::VectorXd values(n1 - 1);
  const double denom = static_cast<double>(n1) * (n1 - 1);
  for (int i = 1; i <= n1 - 1; ++i) {
    values[i - 1] = (static_cast<double>(i) - n1) / denom;
  }
  return make_autocorrelation(n1, std::move(values), Method::Dc1);
}

double spectrum_dc_closed_form(int n1, double omega) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("dc-balanced spectrum needs even n1 >= 2");
  if (omega < 1e-8) return 0.0;  // removable singularity at omega = 0
  const double s = std::sin(n1 * omega / 2.0) / (n1 * std::sin(omega / 2.0));
  return static_cast<double>(n1) / (n1 - 1) * (1.0 - s * s);
}

double lfsw_dc(int n1) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("lfsw_dc needs even n1 >= 2");
  return static_cast<double>(n1) * (n1 + 1) / 12.0;
}

}  // namespace specnull
