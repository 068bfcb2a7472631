#include "specnull/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace specnull {

CubicCorrection cubic_correction(int n) {
  if (n < 4) throw domain_error("cubic correction needs n >= 4");
  const double nn = n;
  const double a = -(6.0 * nn * nn - nn + 2.0) / (2.0 * (nn - 2.0) * nn * nn * nn);
  const double b = (4.0 * nn * nn * nn - 2.0 * nn * nn + nn - 2.0) /
                   (nn * nn * nn * nn * (nn - 1.0) * (nn - 2.0));
  return CubicCorrection{n, a, b};
}

Autocorrelation cubic_autocorrelation(int n) {
  if (n < 4) throw domain_error("cubic autocorrelation needs n >= 4");
  const double nn = n;
  const double n4 = nn * nn * nn * nn;
  Eigen::VectorXd values(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const double x = i;
    values[i - 1] = 2.0 / n4 * (nn - x) * (x * x + x * nn - nn * nn);
  }
  return make_autocorrelation(n, std::move(values), Method::Cubic);
}

Autocorrelation corrected_cubic_autocorrelation(int n) {
  const Autocorrelation rho = cubic_autocorrelation(n);
  const CubicCorrection c = cubic_correction(n);
  const CorrectionFit fit{n, 0.0, 0.0, c.a, c.b};
  return apply_correction(rho, fit, Method::CubicCorrected);
}

std::pair<double, double> lfsw_dc2(int n) {
  const Autocorrelation rho = corrected_cubic_autocorrelation(n);
  double sum = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    const double x = i;
    sum += x * x * x * x * rho.at(i);
  }
  const double nn = n;
  const double asym = nn * nn * nn * nn / 720.0 * (1.0 + 4.0 / nn);
  return {sum / 12.0, asym};
}

PriorArtParams prior_art_params(int n) {
  if (n < 4) throw domain_error("prior-art parabola needs n >= 4");
  const double nn = n;
  const double alpha = -(3.0 * nn * nn - 2.0) / (5.0 * nn);
  const double beta = -15.0 / ((nn - 1.0) * (nn - 2.0) * (4.0 * nn + 3.0));
  return PriorArtParams{n, alpha, beta};
}

Autocorrelation prior_art_autocorrelation(int n) {
  const PriorArtParams p = prior_art_params(n);
  Eigen::VectorXd values(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const double x = i;
    values[i - 1] = p.beta * (x + p.alpha) * (x - n);
  }
  return make_autocorrelation(n, std::move(values), Method::PriorArt);
}

double approx_count_dc2(int n, bool refined) {
  if (n < 4 || n % 4 != 0) throw domain_error("approx_count_dc2 needs n >= 4, n mod 4 = 0");
  const double nn = n;
  double prefactor = 4.0 * std::sqrt(3.0) / (std::numbers::pi * nn * nn);
  if (refined) prefactor *= 1.0 - 1.211 / nn;
  const double value = std::ldexp(prefactor, n);
  if (!std::isfinite(value)) {
    throw domain_error("approximate count overflows double range at n=" + std::to_string(n));
  }
  return value;
}

}  // namespace specnull
