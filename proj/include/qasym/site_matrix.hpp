#pragma once

#include <cmath>
#include <string_view>

#include <Eigen/Dense>

#include "qasym/scalar.hpp"

namespace qasym {

/// Single-site operator of a spin-1/2 chain.
using SiteMatrix = Eigen::Matrix2cd;

/// Normalization of the spin matrices.
///
/// `half`: sigma_z = diag(1/2, -1/2), sigma_x, sigma_y with entries 1/2, and
/// sigma_+- = sigma_x +- i sigma_y with unit off-diagonal entry.
/// `full`: the textbook Pauli matrices, so sigma_+ carries a 2.
enum class PauliConvention { half, full };

inline std::string_view to_string(PauliConvention c) {
  return c == PauliConvention::half ? "half" : "full";
}

namespace pauli {

inline double scale(PauliConvention c) {
  return c == PauliConvention::half ? 0.5 : 1.0;
}

inline SiteMatrix identity() { return SiteMatrix::Identity(); }

inline SiteMatrix x(PauliConvention c) {
  SiteMatrix m;
  m << 0.0, 1.0, 1.0, 0.0;
  return scale(c) * m;
}

inline SiteMatrix y(PauliConvention c) {
  SiteMatrix m;
  m << 0.0, -kI, kI, 0.0;
  return scale(c) * m;
}

inline SiteMatrix z(PauliConvention c) {
  SiteMatrix m;
  m << 1.0, 0.0, 0.0, -1.0;
  return scale(c) * m;
}

inline SiteMatrix plus(PauliConvention c) { return x(c) + kI * y(c); }
inline SiteMatrix minus(PauliConvention c) { return x(c) - kI * y(c); }

/// q^{sign * sigma_z} with the half-convention sigma_z, i.e.
/// diag(q^{sign/2}, q^{-sign/2}). Always half convention regardless of the
/// chain's Pauli convention.
inline SiteMatrix q_power_sz(double gamma, double sign) {
  SiteMatrix m = SiteMatrix::Zero();
  m(0, 0) = std::exp(0.5 * sign * gamma);
  m(1, 1) = std::exp(-0.5 * sign * gamma);
  return m;
}

}  // namespace pauli
}  // namespace qasym
