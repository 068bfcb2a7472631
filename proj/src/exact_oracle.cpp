#include "specnull/exact_oracle.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace specnull {

namespace {

long pair_target_p(int n, int i0, int i1) {
  return static_cast<long>(n) * (n + 1) / 4 - i0 - i1;
}

void check_pair_args(int n, int i0, int i1) {
  if (n % 4 != 0) throw domain_error("pair counting needs n mod 4 = 0");
  if (!(1 <= i0 && i0 < i1 && i1 <= n)) {
    throw domain_error("pair positions need 1 <= i0 < i1 <= n");
  }
}

}  // namespace

std::size_t CountTable::default_budget() {
  if (const char* env = std::getenv("SPECNULL_MEMORY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{2} << 30;  // 2 GiB
}

CountTable::CountTable(int n, std::size_t budget) : n_(n) {
  if (n < 1) throw domain_error("count table needs n >= 1");
  p_max_ = static_cast<long>(n) * (n + 1) / 2;
  if (budget == 0) budget = default_budget();

  const std::size_t entries =
      static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(p_max_ + 1);
  // Per entry: mpz header plus limbs for values up to 2^n.
  const std::size_t est_bytes = entries * (sizeof(mpz_class) + 16 + static_cast<std::size_t>(n) / 8);
  if (est_bytes > budget) {
    throw resource_error("count table for n=" + std::to_string(n) + " needs ~" +
                         std::to_string(est_bytes) + " bytes, budget is " +
                         std::to_string(budget));
  }

  coeff_.assign(entries, mpz_class(0));
  auto at = [&](int c, long p) -> mpz_class& {
    return coeff_[static_cast<std::size_t>(c) * static_cast<std::size_t>(p_max_ + 1) +
                  static_cast<std::size_t>(p)];
  };
  at(0, 0) = 1;
  for (int i = 1; i <= n; ++i) {
    for (int c = std::min(i, n); c >= 1; --c) {
      for (long p = p_max_; p >= i; --p) {
        const mpz_class& prev = at(c - 1, p - i);
        if (prev != 0) at(c, p) += prev;
      }
    }
  }
}

mpz_class CountTable::divided_coeff(int i0, int i1, int c, long p) const {
  // Long division by (1 + z*y^k) is q[c][p] = t[c][p] - q[c-1][p-k];
  // unrolled, the (c, p) entry of the double quotient is the
  // alternating sum over the division steps.
  mpz_class total = 0;
  for (int j0 = 0; j0 <= c; ++j0) {
    const long p0 = p - static_cast<long>(j0) * i0;
    if (p0 < 0) break;
    for (int j1 = 0; j1 + j0 <= c; ++j1) {
      const long pp = p0 - static_cast<long>(j1) * i1;
      if (pp < 0) break;
      const mpz_class& v = coeff(c - j0 - j1, pp);
      if (((j0 + j1) & 1) != 0) {
        total -= v;
      } else {
        total += v;
      }
    }
  }
  return total;
}

std::vector<Codeword> enumerate_s2(int n) {
  if (n < 4 || n > 28) throw domain_error("enumerate_s2 supports 4 <= n <= 28");
  if (n % 4 != 0) throw domain_error("S_2 is empty unless n mod 4 = 0; refusing n=" +
                                     std::to_string(n));
  const int target_w = n / 2;
  const long target_s = static_cast<long>(n) * (n + 1) / 4;

  std::vector<Codeword> out;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);

  // prefix_sum[k] = 1 + 2 + ... + k
  auto tri = [](long k) { return k * (k + 1) / 2; };

  // DFS over positions, '0' before '1' for lexicographic order.
  auto rec = [&](auto&& self, int pos, int w, long s) -> void {
    if (pos > n) {
      if (w == target_w && s == target_s) out.emplace_back(bits);
      return;
    }
    const int remaining_ones = target_w - w;
    const int slots = n - pos + 1;
    if (remaining_ones < 0 || remaining_ones > slots) return;
    // Feasibility of the index sum with remaining_ones ones placed in
    // positions pos..n.
    const long need = target_s - s;
    const long lo = tri(pos - 1 + remaining_ones) - tri(pos - 1);
    const long hi = tri(n) - tri(n - remaining_ones);
    if (need < 0 || need < lo || need > hi) return;

    bits[static_cast<std::size_t>(pos - 1)] = 0;
    self(self, pos + 1, w, s);
    bits[static_cast<std::size_t>(pos - 1)] = 1;
    self(self, pos + 1, w + 1, s + pos);
    bits[static_cast<std::size_t>(pos - 1)] = 0;
  };
  rec(rec, 1, 0, 0);
  return out;
}

mpz_class count_dc2(int n) {
  if (n < 4) throw domain_error("count_dc2 needs n >= 4");
  if (n % 4 != 0) return 0;
  CountTable table(n);
  return table.coeff(n / 2, static_cast<long>(n) * (n + 1) / 4);
}

PairCount pair_count(const CountTable& table, int i0, int i1) {
  const int n = table.length();
  check_pair_args(n, i0, i1);
  mpz_class c = table.divided_coeff(i0, i1, n / 2 - 2, pair_target_p(n, i0, i1));
  return PairCount{n, i0, i1, std::move(c)};
}

mpz_class pair_count_skip(int n, int i0, int i1) {
  check_pair_args(n, i0, i1);
  const long p_max = static_cast<long>(n) * (n + 1) / 2;
  std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(n + 1),
                                        std::vector<mpz_class>(static_cast<std::size_t>(p_max + 1)));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    if (i == i0 || i == i1) continue;
    for (int c = std::min(i, n); c >= 1; --c) {
      for (long p = p_max; p >= i; --p) {
        const mpz_class& prev = t[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(p - i)];
        if (prev != 0) t[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] += prev;
      }
    }
  }
  const long p = pair_target_p(n, i0, i1);
  return t[static_cast<std::size_t>(n / 2 - 2)][static_cast<std::size_t>(p)];
}

double rational_to_double(const mpq_class& q) { return q.get_d(); }

double exact_pair_correlation(const CountTable& table, int i0, int i1) {
  const int n = table.length();
  const mpz_class total = table.coeff(n / 2, static_cast<long>(n) * (n + 1) / 4);
  if (total == 0) throw domain_error("empty codebook, pair correlation undefined");
  const PairCount pc = pair_count(table, i0, i1);
  mpq_class q(4 * pc.count - total, total);
  q.canonicalize();
  return rational_to_double(q);
}

Autocorrelation exact_autocorrelation(const CountTable& table) {
  const int n = table.length();
  if (n % 4 != 0) throw domain_error("exact autocorrelation needs n mod 4 = 0");
  const mpz_class total = table.coeff(n / 2, static_cast<long>(n) * (n + 1) / 4);
  if (total == 0) throw domain_error("empty codebook");

  Eigen::VectorXd values(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    // rho(i) = (1/n) sum_j (4 P_j - N)/N over j = 1..n-i. The pair
    // (j, j+i) and its reversal (n+1-i-j, n+1-j) have equal counts.
    mpz_class pair_sum = 0;
    for (int j = 1; 2 * j <= n + 1 - i; ++j) {
      mpz_class c = table.divided_coeff(j, j + i, n / 2 - 2, pair_target_p(n, j, j + i));
      if (2 * j == n + 1 - i) {
        pair_sum += c;
      } else {
        pair_sum += 2 * c;
      }
    }
    mpq_class q(4 * pair_sum - (n - i) * total, n * total);
    q.canonicalize();
    values[i - 1] = rational_to_double(q);
  }
  return make_autocorrelation(n, std::move(values), Method::Exact);
}

Autocorrelation exact_autocorrelation(int n, bool expensive) {
  if (n < 4 || n % 4 != 0) throw domain_error("exact autocorrelation needs n >= 4, n mod 4 = 0");
  if (n > 128 && !expensive) {
    throw resource_error("exact autocorrelation beyond n=128 requires the expensive flag");
  }
  CountTable table(n);
  return exact_autocorrelation(table);
}

}  // namespace specnull
