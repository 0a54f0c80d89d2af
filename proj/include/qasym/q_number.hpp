#pragma once

#include <cmath>
#include <stdexcept>

namespace qasym {

/// Below this |gamma| the q-deformed quantities switch to their q -> 1 limit.
inline constexpr double kSmallGamma = 1e-8;

/// Deformation q = e^gamma.
class DeformationParam {
 public:
  explicit DeformationParam(double gamma) : gamma_(gamma) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
  }
  double gamma() const { return gamma_; }
  double q() const { return std::exp(gamma_); }

 private:
  double gamma_;
};

/// [x]_q = (q^x - q^-x) / (q - q^-1) = sinh(gamma x) / sinh(gamma).
inline double q_number(double x, double gamma) {
  if (std::abs(gamma) < kSmallGamma) return x;
  return std::sinh(gamma * x) / std::sinh(gamma);
}

}  // namespace qasym
