#include "specnull/clt.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace specnull {

CltIntermediates clt_intermediates(int n, int i0, int i1) {
  if (n < 4) throw domain_error("clt model needs n >= 4");
  if (i0 < 1 || i0 > n || i1 < 1 || i1 > n) throw domain_error("positions out of range");
  if (i0 == i1) throw domain_error("pair correlation needs distinct positions");

  const std::int64_t N = n;
  const std::int64_t a = i0;
  const std::int64_t b = i1;

  const std::int64_t gamma = 12 * N * ((a - N - 1) * a + (b - N - 1) * b);
  const std::int64_t delta = (a - b) * (a - b);
  const std::int64_t n2 = N * N;
  const std::int64_t n3 = n2 * N;
  const double n4 = static_cast<double>(n2) * static_cast<double>(n2);

  const std::int64_t r1_num = 8 * n3 + 13 * n2 + 4 * N + gamma - 12 * delta;
  const std::int64_t r2_num = 12 * n2 + 4 * N + gamma - 6 * (N + 2) * delta;

  CltIntermediates out;
  out.n = n;
  out.i0 = i0;
  out.i1 = i1;
  out.mu_c = static_cast<double>(n - 2) / 2.0 + 2.0;
  out.mu_p = static_cast<double>(N * (N + 1)) / 4.0 + static_cast<double>(a + b) / 2.0;
  out.sigma_c2 = static_cast<double>(n - 2) / 4.0;
  out.sigma_p2 = static_cast<double>(N * (N + 1) * (2 * N + 1)) / 24.0 -
                 static_cast<double>(a * a + b * b) / 4.0;
  out.gamma = static_cast<double>(gamma);
  out.delta = static_cast<double>(delta);
  out.r1 = -static_cast<double>(r1_num) / n4;
  out.r2 = static_cast<double>(r2_num) / (8.0 * static_cast<double>(n3));
  out.phi1_sq = n4 * (1.0 + out.r1) / 192.0;
  out.phi2 = (8.0 / n) * (1.0 + out.r2) / (1.0 + out.r1);

  const std::int64_t num = n2 + N - 2 * (a + b);
  const std::int64_t den = 2 * n3 + 3 * n2 + N - 6 * (a * a + b * b);
  out.gauss_r2 = 3.0 / (2.0 * (n - 2)) * static_cast<double>(num) * static_cast<double>(num) /
                 static_cast<double>(den);
  return out;
}

double clt_pair_correlation(int n, int i0, int i1) {
  const CltIntermediates m = clt_intermediates(n, i0, i1);
  if (1.0 + m.r1 <= 0.0) {
    throw domain_error("clt approximation breakdown: 1 + r1 <= 0 at n=" + std::to_string(n));
  }
  return 1.0 / std::sqrt(1.0 + m.r1) * std::exp(-m.phi2) - 1.0;
}

Autocorrelation clt_autocorrelation(int n) {
  if (n < 8 || n % 4 != 0) throw domain_error("clt autocorrelation needs n >= 8, n mod 4 = 0");
  Eigen::VectorXd values(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    double sum = 0.0;
    for (int j = 1; j <= n - i; ++j) {
      sum += clt_pair_correlation(n, j, j + i);
    }
    values[i - 1] = sum / n;
  }
  return make_autocorrelation(n, std::move(values), Method::Clt);
}

Autocorrelation corrected_clt_autocorrelation(int n) {
  const Autocorrelation rho = clt_autocorrelation(n);
  const NullChecks checks = compute_checks(rho);
  const CorrectionFit fit = correction_coefficients(n, checks.a0, checks.a1);
  return apply_correction(rho, fit, Method::CltCorrected);
}

}  // namespace specnull
