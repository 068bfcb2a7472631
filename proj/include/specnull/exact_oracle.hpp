#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "specnull/autocorrelation.hpp"
#include "specnull/codeword.hpp"
#include "specnull/common.hpp"

namespace specnull {

// Dense table of coefficients of prod_{i=1..n} (1 + z*y^i), where z
// tracks the weight c = sum x_i and y tracks the index sum
// p = sum i*x_i. coeff(c, p) is the exact number of length-n binary
// words with that (c, p). Immutable after construction.
class CountTable {
 public:
  // Throws resource_error if the estimated table footprint exceeds the
  // budget (bytes). budget = 0 means use default_budget().
  explicit CountTable(int n, std::size_t budget = 0);

  int length() const { return n_; }
  long p_max() const { return p_max_; }

  const mpz_class& coeff(int c, long p) const {
    return coeff_[static_cast<std::size_t>(c) * static_cast<std::size_t>(p_max_ + 1) +
                  static_cast<std::size_t>(p)];
  }

  // Coefficient (c, p) of the quotient of the full product by
  // (1 + z*y^{i0})(1 + z*y^{i1}), by exact long division in the
  // (c, p) grid.
  mpz_class divided_coeff(int i0, int i1, int c, long p) const;

  // Default budget in bytes; overridable through the environment
  // variable SPECNULL_MEMORY_BUDGET.
  static std::size_t default_budget();

 private:
  int n_;
  long p_max_;
  std::vector<mpz_class> coeff_;
};

// All members of S_2 in lexicographic order of their string form.
// Guarded at n <= 28; n mod 4 != 0 is an error (use is_dc2_balanced
// for per-word queries).
std::vector<Codeword> enumerate_s2(int n);

// |S_2(n)| by exact counting; 0 when n mod 4 != 0.
mpz_class count_dc2(int n);

struct PairCount {
  int n = 0;
  int i0 = 0;
  int i1 = 0;
  mpz_class count;
};

// Number of S_2 members with x_{i0} = x_{i1} = 1, read off the divided
// table at (n/2 - 2, n(n+1)/4 - i0 - i1). Requires 1 <= i0 < i1 <= n.
PairCount pair_count(const CountTable& table, int i0, int i1);

// Independent route: rebuild the product skipping positions i0 and i1.
// Used to validate the division path.
mpz_class pair_count_skip(int n, int i0, int i1);

// r_hat(i0, i1) = 4*pair_count/N - 1, exact rational converted to
// double at the boundary.
double exact_pair_correlation(const CountTable& table, int i0, int i1);

// rho_hat(i) = (1/n) sum_{j=1..n-i} r_hat(j, j+i), exact rationals
// throughout, one conversion per lag. Reversal symmetry halves the
// pair computations. Default guard at n <= 128; n up to 256 needs
// expensive = true.
Autocorrelation exact_autocorrelation(int n, bool expensive = false);
Autocorrelation exact_autocorrelation(const CountTable& table);

// Shared double conversion so the counting and enumeration routes land
// on bit-identical values.
double rational_to_double(const mpq_class& q);

}  // namespace specnull
