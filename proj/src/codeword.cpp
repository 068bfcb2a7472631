#include "specnull/codeword.hpp"

#include <algorithm>

namespace specnull {

Codeword::Codeword(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw domain_error("codeword symbol outside {0,1}");
  }
}

Codeword Codeword::parse(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw domain_error("codeword string must be over {0,1}");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Codeword(std::move(bits));
}

std::string Codeword::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

bool CodeParams::valid() const {
  if (n <= 0) return false;
  if (order == Order::First) return n % 2 == 0;
  return n % 4 == 0;
}

bool is_dc2_balanced(const Codeword& w) {
  const int n = w.length();
  if (n % 4 != 0) return false;  // both targets non-integral otherwise
  long long weight = 0;
  long long index_sum = 0;
  for (int i = 1; i <= n; ++i) {
    weight += w.bit(i);
    index_sum += static_cast<long long>(i) * w.bit(i);
  }
  return weight == n / 2 &&
         index_sum == static_cast<long long>(n) * (n + 1) / 4;
}

Codeword complement(const Codeword& w) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(w.length()));
  for (int i = 1; i <= w.length(); ++i) {
    bits[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(1 - w.bit(i));
  }
  return Codeword(std::move(bits));
}

Codeword reversed(const Codeword& w) {
  const int n = w.length();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    bits[static_cast<std::size_t>(n - i)] = static_cast<std::uint8_t>(w.bit(i));
  }
  return Codeword(std::move(bits));
}

}  // namespace specnull
