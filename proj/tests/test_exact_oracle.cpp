#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specnull/exact_oracle.hpp"

using namespace specnull;

namespace {

// Independent oracle: evaluate the defining lag-product average over the
// enumerated codebook with exact integer sums.
Autocorrelation autocorrelation_by_enumeration(int n) {
  const std::vector<Codeword> words = enumerate_s2(n);
  REQUIRE(!words.empty());
  Eigen::VectorXd values(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    long long sum = 0;
    for (const Codeword& w : words) {
      for (int j = 1; j <= n - i; ++j) {
        sum += w.bipolar(j) * w.bipolar(j + i);
      }
    }
    mpq_class q(mpz_class(static_cast<long>(sum)),
                mpz_class(static_cast<long>(n) * static_cast<long>(words.size())));
    q.canonicalize();
    values[i - 1] = rational_to_double(q);
  }
  return make_autocorrelation(n, std::move(values), Method::Exact);
}

}  // namespace

TEST_CASE("enumerate_s2 small cases") {
  const auto s4 = enumerate_s2(4);
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].str() == "0110");
  CHECK(s4[1].str() == "1001");

  const auto s8 = enumerate_s2(8);
  CHECK(s8.size() == 8);
  for (const auto& w : s8) CHECK(is_dc2_balanced(w));

  CHECK_THROWS_AS(enumerate_s2(6), domain_error);
  CHECK_THROWS_AS(enumerate_s2(32), domain_error);  // beyond the brute-force guard
}

TEST_CASE("count table coefficients") {
  const CountTable t2(2);
  CHECK(t2.coeff(0, 0) == 1);
  CHECK(t2.coeff(1, 1) == 1);
  CHECK(t2.coeff(1, 2) == 1);
  CHECK(t2.coeff(2, 3) == 1);

  const CountTable t4(4);
  CHECK(t4.coeff(2, 5) == 2);

  for (int n : {3, 7, 12}) {
    const CountTable t(n);
    mpz_class total = 0;
    for (int c = 0; c <= n; ++c) {
      for (long p = 0; p <= t.p_max(); ++p) total += t.coeff(c, p);
    }
    mpz_class expect = 1;
    expect <<= n;
    CHECK(total == expect);
  }
}

TEST_CASE("count table symmetry") {
  for (int n : {8, 12}) {
    const CountTable t(n);
    const long pmax = t.p_max();
    for (int c = 0; c <= n; ++c) {
      for (long p = 0; p <= pmax; ++p) {
        const long rev = static_cast<long>(c) * (n + 1) - p;
        if (rev >= 0 && rev <= pmax) CHECK(t.coeff(c, p) == t.coeff(c, rev));
        CHECK(t.coeff(c, p) == t.coeff(n - c, pmax - p));
      }
    }
  }
}

TEST_CASE("count_dc2") {
  CHECK(count_dc2(4) == 2);
  CHECK(count_dc2(8) == 8);
  CHECK(count_dc2(6) == 0);
  CHECK(count_dc2(12) == mpz_class(enumerate_s2(12).size()));
}

TEST_CASE("memory budget guard") {
  CHECK_THROWS_AS(CountTable(64, 1024), resource_error);
}

TEST_CASE("pair counts at n=4") {
  const CountTable t(4);
  CHECK(pair_count(t, 1, 4).count == 1);  // only 1001
  CHECK(pair_count(t, 1, 2).count == 0);
  CHECK(pair_count(t, 2, 3).count == 1);  // only 0110
  CHECK_THROWS_AS(pair_count(t, 3, 3), domain_error);
  CHECK_THROWS_AS(pair_count(t, 0, 2), domain_error);
}

TEST_CASE("division route matches skip-product route") {
  for (int n : {8, 12, 16}) {
    const CountTable t(n);
    for (int i0 = 1; i0 < n; ++i0) {
      for (int i1 = i0 + 1; i1 <= n; ++i1) {
        CHECK(pair_count(t, i0, i1).count == pair_count_skip(n, i0, i1));
      }
    }
  }
}

TEST_CASE("exact pair correlation") {
  const CountTable t(4);
  CHECK(exact_pair_correlation(t, 1, 4) == 1.0);
  CHECK(exact_pair_correlation(t, 1, 2) == -1.0);

  const CountTable t12(12);
  for (int i0 = 1; i0 < 12; ++i0) {
    for (int i1 = i0 + 1; i1 <= 12; ++i1) {
      // reversal closure: r(i0, i1) = r(n+1-i1, n+1-i0)
      CHECK(exact_pair_correlation(t12, i0, i1) ==
            exact_pair_correlation(t12, 13 - i1, 13 - i0));
    }
  }
}

TEST_CASE("exact autocorrelation n=4") {
  const Autocorrelation rho = exact_autocorrelation(4);
  CHECK(rho.at(1) == -0.25);
  CHECK(rho.at(2) == -0.5);
  CHECK(rho.at(3) == 0.25);
}

TEST_CASE("null conditions hold exactly for full sets") {
  for (int n : {4, 8, 12, 16, 20, 24}) {
    const Autocorrelation rho = exact_autocorrelation(n);
    double a0 = 0.5;
    double a1 = 0.0;
    for (int i = 1; i <= n - 1; ++i) {
      a0 += rho.at(i);
      a1 += static_cast<double>(i) * i * rho.at(i);
    }
    CHECK(std::abs(a0) < 1e-12);
    CHECK(std::abs(a1) < 1e-12);
  }
}

TEST_CASE("backend equivalence: counting equals enumeration exactly") {
  for (int n : {8, 12, 16, 20, 24}) {
    const Autocorrelation counted = exact_autocorrelation(n);
    const Autocorrelation enumerated = autocorrelation_by_enumeration(n);
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(counted.at(i) == enumerated.at(i));
    }
  }
}

TEST_CASE("count asymptotics approach the exact count") {
  double prev_gap = 1e9;
  for (int n : {16, 32, 64}) {
    const mpz_class exact = count_dc2(n);
    const double asym = 4.0 * std::sqrt(3.0) * std::ldexp(1.0, n) / (M_PI * n * n);
    const double gap = std::abs(asym / exact.get_d() - 1.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("expensive guard beyond n=128") {
  CHECK_THROWS_AS(exact_autocorrelation(132, false), resource_error);
}
