#include "specnull/common.hpp"

namespace specnull {

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact:
      return "exact";
    case Method::Clt:
      return "clt";
    case Method::CltCorrected:
      return "clt-corrected";
    case Method::Cubic:
      return "cubic";
    case Method::CubicCorrected:
      return "cubic-corrected";
    case Method::PriorArt:
      return "prior-art";
    case Method::Dc1:
      return "dc1";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  if (s == "exact") return Method::Exact;
  if (s == "clt") return Method::Clt;
  if (s == "clt-corrected") return Method::CltCorrected;
  if (s == "cubic") return Method::Cubic;
  if (s == "cubic-corrected") return Method::CubicCorrected;
  if (s == "prior-art") return Method::PriorArt;
  if (s == "dc1") return Method::Dc1;
  throw domain_error("unknown method: " + s);
}

}  // namespace specnull
