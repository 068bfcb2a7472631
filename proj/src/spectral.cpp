#include "specnull/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "specnull/asymptotic.hpp"
#include "specnull/dc_baseline.hpp"

namespace specnull {

Eigen::ArrayXd default_grid(int points) {
  if (points < 1) throw domain_error("grid needs at least one point");
  Eigen::ArrayXd omegas(points);
  for (int k = 1; k <= points; ++k) {
    omegas[k - 1] = std::numbers::pi * k / points;
  }
  return omegas;
}

SpectrumCurve spectrum_from_autocorrelation(const Autocorrelation& rho,
                                            const Eigen::ArrayXd& omegas) {
  SpectrumCurve curve;
  curve.omegas = omegas;
  curve.values.resize(omegas.size());
  curve.method = rho.method;
  for (Eigen::Index k = 0; k < omegas.size(); ++k) {
    const double w = omegas[k];
    double h = 1.0;
    for (int i = 1; i <= rho.lags(); ++i) {
      h += 2.0 * rho.at(i) * std::cos(i * w);
    }
    curve.values[k] = h;
    if (h <= 0.0) curve.has_nonpositive = true;
  }
  return curve;
}

double lfsw_from_autocorrelation(const Autocorrelation& rho) {
  double sum = 0.0;
  for (int i = 1; i <= rho.lags(); ++i) {
    const double x = i;
    sum += x * x * x * x * rho.at(i);
  }
  return sum / 12.0;
}

NullReport verify_null_conditions(const Autocorrelation& rho, int order, double tol) {
  if (order != 1 && order != 2) throw domain_error("null-condition order must be 1 or 2");
  const NullChecks checks = compute_checks(rho);
  NullReport report;
  report.order = order;
  report.a0 = checks.a0;
  report.a1 = checks.a1;
  report.tol = tol;
  report.pass = std::abs(checks.a0) <= tol && (order == 1 || std::abs(checks.a1) <= tol);
  return report;
}

RatioCurve db_ratio(const SpectrumCurve& num, const SpectrumCurve& den) {
  if (num.omegas.size() != den.omegas.size() ||
      (num.omegas - den.omegas).abs().maxCoeff() != 0.0) {
    throw domain_error("db_ratio needs identical frequency grids");
  }
  RatioCurve out;
  out.omegas = num.omegas;
  out.db.resize(num.omegas.size());
  for (Eigen::Index k = 0; k < num.omegas.size(); ++k) {
    if (num.values[k] <= 1e-300 || den.values[k] <= 1e-300) {
      out.db[k] = std::numeric_limits<double>::quiet_NaN();
      ++out.excluded;
    } else {
      out.db[k] = 10.0 * std::log10(num.values[k] / den.values[k]);
    }
  }
  return out;
}

double rate_dc2(int n) {
  if (n < 4 || n % 4 != 0) throw domain_error("rate_dc2 needs n mod 4 = 0");
  const double nn = n;
  return 1.0 - std::log2(std::numbers::pi * nn * nn / (4.0 * std::sqrt(3.0))) / nn;
}

double rate_dc(int n1) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("rate_dc needs even n1 >= 2");
  const double nn = n1;
  return 1.0 - std::log2(std::numbers::pi * nn / 2.0) / (2.0 * nn);
}

std::pair<int, int> match_lengths(double rate_target) {
  if (!(rate_target > 0.0 && rate_target < 1.0)) {
    throw domain_error("rate target must lie in (0, 1)");
  }
  int n1 = 2;
  while (rate_dc(n1) < rate_target) n1 += 2;
  int n = 4;
  while (rate_dc2(n) < rate_target) n += 4;
  return {n1, n};
}

Intersection find_intersection(int n1, const Autocorrelation& rho_dc2) {
  if (n1 < 2 || n1 % 2 != 0) throw domain_error("find_intersection needs even n1 >= 2");
  constexpr int kScanPoints = 10000;
  auto diff = [&](double w) {
    double h = 1.0;
    for (int i = 1; i <= rho_dc2.lags(); ++i) {
      h += 2.0 * rho_dc2.at(i) * std::cos(i * w);
    }
    return spectrum_dc_closed_form(n1, w) - h;
  };

  double prev_w = std::numbers::pi / kScanPoints;
  double prev_d = diff(prev_w);
  for (int k = 2; k <= kScanPoints; ++k) {
    const double w = std::numbers::pi * k / kScanPoints;
    const double d = diff(w);
    if (prev_d != 0.0 && d * prev_d < 0.0) {
      double lo = prev_w;
      double hi = w;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (diff(mid) * prev_d < 0.0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const double wc = 0.5 * (lo + hi);
      const double level = spectrum_dc_closed_form(n1, wc);
      return Intersection{wc, 10.0 * std::log10(level)};
    }
    prev_w = w;
    prev_d = d;
  }
  throw domain_error("no spectrum intersection found on the scan grid for n1=" +
                     std::to_string(n1));
}

DesignPoint design_point(double rate_target) {
  const auto [n1, n] = match_lengths(rate_target);
  const Autocorrelation rho = corrected_cubic_autocorrelation(n);
  const Intersection cross = find_intersection(n1, rho);
  return DesignPoint{rate_target, n1, n, cross.omega_cross, cross.level_db};
}

}  // namespace specnull
