#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qasym {

/// Level set x^2 + y^2 + sinh^2(gamma z) / (gamma sinh gamma) = r^2 of the
/// deformed sphere, sampled as a surface of revolution about z.
struct SurfaceSpec {
  double gamma = 0.0;
  double radius = 1.0;
  std::size_t n_z = 32;
  std::size_t n_phi = 64;

  void validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be positive");
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
    if (n_z < 3 || n_phi < 3) throw std::invalid_argument("mesh resolution must be >= 3");
  }
};

using Vec3 = std::array<double, 3>;
using Triangle = std::array<std::size_t, 3>;

struct Mesh {
  std::vector<Vec3> vertices;
  /// Counter-clockwise seen from outside.
  std::vector<Triangle> faces;
};

/// Below this |gamma| the z-term uses its sphere limit z^2.
inline constexpr double kSphereGamma = 1e-6;

namespace detail {
// sinh^2(gamma z) / (gamma sinh gamma); even in gamma, so |gamma| is used
inline double z_term(double z, double gamma) {
  const double g = std::abs(gamma);
  if (g < kSphereGamma) return z * z;
  const double s = std::sinh(g * z);
  return s * s / (g * std::sinh(g));
}
}  // namespace detail

inline double implicit_residual(const Vec3& p, const SurfaceSpec& spec) {
  return p[0] * p[0] + p[1] * p[1] + detail::z_term(p[2], spec.gamma) - spec.radius * spec.radius;
}

/// Pole height: the z where the circle radius closes to zero.
inline double z_max(const SurfaceSpec& spec) {
  const double g = std::abs(spec.gamma);
  if (g < kSphereGamma) return spec.radius;
  return std::asinh(spec.radius * std::sqrt(g * std::sinh(g))) / g;
}

/// Circle radius of the slice at height z; zero at and beyond the poles.
inline double slice_radius(double z, const SurfaceSpec& spec) {
  const double rho_sq = spec.radius * spec.radius - detail::z_term(z, spec.gamma);
  return rho_sq > 0.0 ? std::sqrt(rho_sq) : 0.0;
}

/// Cosine-spaced heights from -z_max to z_max, exactly antisymmetric.
inline std::vector<double> slice_heights(const SurfaceSpec& spec) {
  const double zm = z_max(spec);
  const std::size_t n = spec.n_z;
  std::vector<double> z(n);
  for (std::size_t i = 0; i <= (n - 1) / 2; ++i) {
    const double t = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1));
    z[i] = -zm * t;
    z[n - 1 - i] = zm * t;
  }
  if (n % 2 == 1) z[n / 2] = 0.0;
  z.front() = -zm;
  z.back() = zm;
  return z;
}

/// Vertex 0 is the south pole, then (n_z - 2) rings of n_phi vertices from
/// south to north, then the north pole.
inline Mesh deformed_sphere_mesh(const SurfaceSpec& spec) {
  spec.validate();
  const std::size_t nz = spec.n_z;
  const std::size_t np = spec.n_phi;
  const std::vector<double> z = slice_heights(spec);

  std::vector<double> cos_phi(np), sin_phi(np);
  for (std::size_t k = 0; k < np; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(np);
    cos_phi[k] = std::cos(phi);
    sin_phi[k] = std::sin(phi);
  }

  Mesh mesh;
  mesh.vertices.reserve((nz - 2) * np + 2);
  mesh.vertices.push_back({0.0, 0.0, z.front()});
  for (std::size_t i = 1; i + 1 < nz; ++i) {
    const double rho = slice_radius(z[i], spec);
    for (std::size_t k = 0; k < np; ++k) mesh.vertices.push_back({rho * cos_phi[k], rho * sin_phi[k], z[i]});
  }
  mesh.vertices.push_back({0.0, 0.0, z.back()});

  const std::size_t south = 0;
  const std::size_t north = mesh.vertices.size() - 1;
  auto ring = [np](std::size_t r, std::size_t k) { return 1 + r * np + (k % np); };
  const std::size_t rings = nz - 2;

  mesh.faces.reserve(2 * (nz - 3) * np + 2 * np);
  for (std::size_t k = 0; k < np; ++k) mesh.faces.push_back({south, ring(0, k + 1), ring(0, k)});
  for (std::size_t r = 0; r + 1 < rings; ++r) {
    for (std::size_t k = 0; k < np; ++k) {
      mesh.faces.push_back({ring(r, k), ring(r, k + 1), ring(r + 1, k + 1)});
      mesh.faces.push_back({ring(r, k), ring(r + 1, k + 1), ring(r + 1, k)});
    }
  }
  for (std::size_t k = 0; k < np; ++k) mesh.faces.push_back({north, ring(rings - 1, k), ring(rings - 1, k + 1)});
  return mesh;
}

}  // namespace qasym
