#pragma once

#include <stdexcept>
#include <string>

namespace specnull {

// Domain errors: invalid lengths, positions, or values outside the
// contracts of the library (e.g. n mod 4 != 0 where required).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource-guard refusals: a computation was declined because it would
// exceed a configured memory budget or requires the expensive flag.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Provenance tag of an autocorrelation sequence.
enum class Method {
  Exact,
  Clt,
  CltCorrected,
  Cubic,
  CubicCorrected,
  PriorArt,
  Dc1,
};

std::string to_string(Method m);
Method method_from_string(const std::string& s);

}  // namespace specnull
