#pragma once

#include <cmath>
#include <complex>

namespace qasym {

using Scalar = std::complex<double>;

inline constexpr Scalar kI{0.0, 1.0};

inline bool is_finite(const Scalar& s) {
  return std::isfinite(s.real()) && std::isfinite(s.imag());
}

}  // namespace qasym
