#include "specnull/autocorrelation.hpp"

#include <cmath>
#include <string>

namespace specnull {

Autocorrelation make_autocorrelation(int n, Eigen::VectorXd values, Method method) {
  if (n < 2) throw domain_error("autocorrelation needs n >= 2");
  if (values.size() != n - 1) {
    throw domain_error("autocorrelation for n=" + std::to_string(n) + " needs " +
                       std::to_string(n - 1) + " values, got " +
                       std::to_string(values.size()));
  }
  if (!values.allFinite()) throw domain_error("autocorrelation has non-finite entries");
  return Autocorrelation{n, std::move(values), method};
}

NullChecks compute_checks(const Autocorrelation& rho) {
  // extended precision: the i^2 sum cancels to ~0 from O(n^2)-sized terms
  long double a0 = 0.0L;
  long double a1 = 0.0L;
  for (int i = 1; i <= rho.lags(); ++i) {
    a0 += rho.at(i);
    a1 += static_cast<long double>(i) * i * rho.at(i);
  }
  return NullChecks{static_cast<double>(a0 + 0.5L), static_cast<double>(a1)};
}

CorrectionFit correction_coefficients(int n, double a0, double a1) {
  if (n < 3) throw domain_error("correction needs n >= 3");
  const double nn = n;
  const double a = -3.0 * (nn * (nn - 1.0) * a0 - 2.0 * a1) / (nn * (nn - 1.0) * (nn - 2.0));
  const double b =
      2.0 * (nn * (2.0 * nn - 1.0) * a0 - 6.0 * a1) / (nn * nn * (nn - 1.0) * (nn - 2.0));
  return CorrectionFit{n, a0, a1, a, b};
}

Autocorrelation apply_correction(const Autocorrelation& rho, const CorrectionFit& fit,
                                 Method new_method) {
  if (fit.n != rho.n) throw domain_error("correction fit length mismatch");
  Eigen::VectorXd v = rho.values;
  for (int i = 1; i <= rho.lags(); ++i) {
    v[i - 1] += fit.a + fit.b * i;
  }
  return make_autocorrelation(rho.n, std::move(v), new_method);
}

}  // namespace specnull
