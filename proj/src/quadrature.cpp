#include "monometric/quadrature.hpp"

#include <cstdlib>

namespace monometric {

QuadratureConfig QuadratureConfig::from_env() {
  QuadratureConfig config;
  if (const char* raw = std::getenv("MONOMETRIC_QUAD_TOL"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value > 0.0))
      throw Error(ErrorKind::InvalidArgument,
                  std::string("MONOMETRIC_QUAD_TOL is not a positive number: ") + raw);
    config.abs_tol = value;
  }
  return config;
}

}  // namespace monometric
