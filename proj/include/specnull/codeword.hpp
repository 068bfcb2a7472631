#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specnull/common.hpp"

namespace specnull {

// An n-bit binary codeword. Positions are 1-based; bit(1) is the
// leftmost symbol of the serialized string form.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<std::uint8_t> bits);

  static Codeword parse(std::string_view s);

  int length() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
  // Bipolar view, 2x - 1 in {-1, +1}.
  int bipolar(int i) const { return 2 * bit(i) - 1; }

  std::string str() const;

  bool operator==(const Codeword&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Codeword length plus spectral-null order.
struct CodeParams {
  enum class Order { First, Second };
  int n = 0;
  Order order = Order::Second;

  // First order needs n even; second order needs n mod 4 = 0 for a
  // non-empty codebook.
  bool valid() const;
};

// True iff sum x_i = n/2 and sum i*x_i = n(n+1)/4, both in exact
// integer arithmetic. Total function: false when a target is
// non-integral (n mod 4 != 0).
bool is_dc2_balanced(const Codeword& w);

Codeword complement(const Codeword& w);
Codeword reversed(const Codeword& w);

}  // namespace specnull
