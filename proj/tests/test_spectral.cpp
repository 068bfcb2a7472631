#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specnull/asymptotic.hpp"
#include "specnull/dc_baseline.hpp"
#include "specnull/exact_oracle.hpp"
#include "specnull/spectral.hpp"

using namespace specnull;

TEST_CASE("default grid excludes zero and ends at pi") {
  const Eigen::ArrayXd grid = default_grid();
  CHECK(grid.size() == 4096);
  CHECK(grid[0] > 0.0);
  CHECK(grid[grid.size() - 1] == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  for (Eigen::Index k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);
}

TEST_CASE("spectrum of the exact n=4 code") {
  const Autocorrelation rho = exact_autocorrelation(4);
  Eigen::ArrayXd omegas(3);
  omegas << 0.0, std::numbers::pi / 2.0, std::numbers::pi;
  const SpectrumCurve curve = spectrum_from_autocorrelation(rho, omegas);
  CHECK(std::abs(curve.values[0]) < 1e-14);
  CHECK(curve.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(curve.values[2]) < 1e-14);
}

TEST_CASE("lfsw values") {
  CHECK(lfsw_from_autocorrelation(exact_autocorrelation(4)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(lfsw_from_autocorrelation(corrected_cubic_autocorrelation(128)) - 384339.75) <
        0.01);
}

TEST_CASE("lfsw matches the Taylor limit of the spectrum") {
  for (int n : {32, 64}) {
    const Autocorrelation rho = corrected_cubic_autocorrelation(n);
    const double chi = lfsw_from_autocorrelation(rho);
    Eigen::ArrayXd omegas(2);
    omegas << std::pow(10.0, -2.5), 1e-2;
    const SpectrumCurve curve = spectrum_from_autocorrelation(rho, omegas);
    const double v_small = curve.values[0] / std::pow(omegas[0], 4);
    const double v_large = curve.values[1] / std::pow(omegas[1], 4);
    // H/w^4 = chi + c w^2; eliminate the w^2 term from the two samples
    const double ratio = (omegas[1] * omegas[1]) / (omegas[0] * omegas[0]);
    const double extrapolated = (ratio * v_small - v_large) / (ratio - 1.0);
    CHECK(std::abs(extrapolated / chi - 1.0) < 0.01);
  }
}

TEST_CASE("verify_null_conditions") {
  CHECK(verify_null_conditions(exact_autocorrelation(8), 2, 1e-12).pass);

  const NullReport cubic32 = verify_null_conditions(cubic_autocorrelation(32), 2, 1e-6);
  CHECK_FALSE(cubic32.pass);
  CHECK(std::abs(cubic32.a1 - (-1.0 / 6.0 + 1.0 / (6.0 * 1024.0))) < 1e-10);

  CHECK(verify_null_conditions(autocorrelation_dc(8), 1, 1e-12).pass);
  CHECK_THROWS_AS(verify_null_conditions(autocorrelation_dc(8), 3, 1e-12), domain_error);
}

TEST_CASE("db_ratio") {
  const Eigen::ArrayXd grid = default_grid(256);
  const SpectrumCurve a = spectrum_from_autocorrelation(corrected_cubic_autocorrelation(32), grid);
  const RatioCurve same = db_ratio(a, a);
  CHECK(same.excluded == 0);
  CHECK(same.db.abs().maxCoeff() == 0.0);

  const SpectrumCurve b =
      spectrum_from_autocorrelation(corrected_cubic_autocorrelation(32), default_grid(128));
  CHECK_THROWS_AS(db_ratio(a, b), domain_error);
}

TEST_CASE("spectrum is affine in the autocorrelation") {
  const Eigen::ArrayXd grid = default_grid(64);
  const Autocorrelation r1 = corrected_cubic_autocorrelation(16);
  const Autocorrelation r2 = prior_art_autocorrelation(16);
  const double al = 0.3;
  const double be = 0.9;
  Eigen::VectorXd mixed = al * r1.values + be * r2.values;
  const SpectrumCurve hm =
      spectrum_from_autocorrelation(make_autocorrelation(16, mixed, Method::Cubic), grid);
  const SpectrumCurve h1 = spectrum_from_autocorrelation(r1, grid);
  const SpectrumCurve h2 = spectrum_from_autocorrelation(r2, grid);
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const double expect = al * h1.values[k] + be * h2.values[k] + (1.0 - al - be);
    CHECK(hm.values[k] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("rates") {
  CHECK(rate_dc(28) == doctest::Approx(0.9025).epsilon(1e-3));
  CHECK(rate_dc(28) >= 0.90);
  CHECK(rate_dc2(132) == doctest::Approx(0.9019).epsilon(1e-3));
  CHECK(rate_dc2(132) >= 0.90);
  CHECK(rate_dc2(128) < 0.90);
  CHECK_THROWS_AS(rate_dc2(30), domain_error);
  CHECK_THROWS_AS(rate_dc(7), domain_error);
}

TEST_CASE("matched lengths") {
  CHECK(match_lengths(0.90) == std::pair<int, int>{28, 132});
  CHECK(match_lengths(0.94) == std::pair<int, int>{54, 248});
  CHECK(match_lengths(0.98) == std::pair<int, int>{210, 932});
  CHECK_THROWS_AS(match_lengths(1.0), domain_error);

  // monotone in the target
  std::pair<int, int> prev{0, 0};
  for (double r : {0.5, 0.7, 0.9, 0.95, 0.99}) {
    const auto lengths = match_lengths(r);
    CHECK(lengths.first >= prev.first);
    CHECK(lengths.second >= prev.second);
    prev = lengths;
  }
}

TEST_CASE("spectrum intersection") {
  const DesignPoint dp = design_point(0.94);
  CHECK(dp.n1 == 54);
  CHECK(dp.n == 248);
  CHECK(dp.omega_cross > 0.0);
  CHECK(dp.omega_cross < std::numbers::pi);
  CHECK(dp.level_db > -23.0);
  CHECK(dp.level_db < -17.0);

  // below the crossing the dc^2 code suppresses more
  const Autocorrelation rho = corrected_cubic_autocorrelation(dp.n);
  for (double f : {0.25, 0.5, 0.75}) {
    const double w = f * dp.omega_cross;
    double h = 1.0;
    for (int i = 1; i <= rho.lags(); ++i) h += 2.0 * rho.at(i) * std::cos(i * w);
    CHECK(h < spectrum_dc_closed_form(dp.n1, w));
  }
}
