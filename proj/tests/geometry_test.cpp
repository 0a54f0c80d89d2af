#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <gtest/gtest.h>

#include "qasym/geometry.hpp"
#include "qasym/io/mesh_io.hpp"

using namespace qasym;

namespace {

// Each directed edge must appear once and its reverse once: closed,
// consistently oriented 2-manifold.
bool watertight(const Mesh& m) {
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) ++directed[{f[e], f[(e + 1) % 3]}];
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    auto it = directed.find({edge.second, edge.first});
    if (it == directed.end() || it->second != 1) return false;
  }
  return true;
}

double signed_volume(const Mesh& m) {
  double v = 0.0;
  for (const auto& f : m.faces) {
    const auto &a = m.vertices[f[0]], &b = m.vertices[f[1]], &c = m.vertices[f[2]];
    v += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
  }
  return v / 6.0;
}

std::vector<Vec3> sorted_vertices(std::vector<Vec3> v) {
  for (auto& p : v)
    for (auto& x : p)
      if (x == 0.0) x = 0.0;  // fold -0
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(ImplicitResidual, Examples) {
  const SurfaceSpec sphere{0.0, 1.7};
  EXPECT_EQ(implicit_residual({1.7, 0.0, 0.0}, sphere), 0.0);
  EXPECT_NEAR(implicit_residual({0.0, 0.0, 1.7}, sphere), 0.0, 1e-15);
  const SurfaceSpec s2{2.0, 1.0};
  const double zm = std::asinh(std::sqrt(2.0 * std::sinh(2.0))) / 2.0;
  EXPECT_NEAR(z_max(s2), zm, 1e-15);
  EXPECT_NEAR(z_max(s2), 0.8583564963492233, 1e-15);
  EXPECT_NEAR(implicit_residual({0.0, 0.0, z_max(s2)}, s2), 0.0, 1e-14);
}

TEST(ImplicitResidual, SmallGammaContinuous) {
  const Vec3 p{0.3, 0.2, 0.7};
  EXPECT_NEAR(implicit_residual(p, {1e-7, 1.0}), implicit_residual(p, {2e-6, 1.0}), 1e-11);
  EXPECT_EQ(implicit_residual(p, {0.8, 1.0}), implicit_residual(p, {-0.8, 1.0}));
}

TEST(SliceRadius, ShapeProperties) {
  for (double g : {0.0, 1.0, 2.0, 5.0}) {
    const SurfaceSpec s{g, 1.0};
    const double zm = z_max(s);
    EXPECT_NEAR(slice_radius(zm, s), 0.0, 1e-7);
    EXPECT_NEAR(slice_radius(-zm, s), 0.0, 1e-7);
    double prev = slice_radius(0.0, s);
    EXPECT_NEAR(prev, 1.0, 1e-15);
    for (int i = 1; i <= 100; ++i) {
      const double rho = slice_radius(zm * i / 100.0, s);
      EXPECT_LE(rho, prev);
      EXPECT_EQ(rho, slice_radius(-zm * i / 100.0, s));
      prev = rho;
    }
  }
}

TEST(SliceRadius, FlankFlattensWithGamma) {
  // rho(0.9 z_max)/rho(0) = sqrt(1 - sinh^2(0.9 a)/sinh^2(a)), a = asinh(sqrt(g sinh g)),
  // evaluated at 30 digits
  auto ratio = [](double g) {
    const SurfaceSpec s{g, 1.0};
    return slice_radius(0.9 * z_max(s), s) / slice_radius(0.0, s);
  };
  EXPECT_NEAR(ratio(5.0), 0.720399873441039709661157018384, 1e-12);
  EXPECT_NEAR(ratio(2.0), 0.556648306064136239545313930015, 1e-12);
  EXPECT_NEAR(ratio(0.0), std::sqrt(1.0 - 0.81), 1e-12);
  double prev = 0.0;
  for (double g : {0.0, 1.0, 2.0, 5.0, 10.0}) {
    EXPECT_GT(ratio(g), prev);
    prev = ratio(g);
  }
  EXPECT_GT(ratio(20.0), 0.8);
}

TEST(Mesh, Counts) {
  for (auto [nz, np] : {std::pair{3u, 3u}, std::pair{4u, 5u}, std::pair{32u, 64u}, std::pair{17u, 9u}}) {
    const Mesh m = deformed_sphere_mesh({1.0, 1.0, nz, np});
    EXPECT_EQ(m.vertices.size(), (nz - 2) * np + 2);
    EXPECT_EQ(m.faces.size(), 2 * (nz - 3) * np + 2 * np);
    for (const auto& f : m.faces)
      for (auto i : f) EXPECT_LT(i, m.vertices.size());
  }
}

TEST(Mesh, ValidAcrossDeformations) {
  for (double g : {0.0, 1.0, 2.0, 5.0})
    for (double r : {1.0, 2.5}) {
      const SurfaceSpec s{g, r, 33, 48};
      const Mesh m = deformed_sphere_mesh(s);
      double worst = 0.0;
      for (const auto& v : m.vertices) worst = std::max(worst, std::abs(implicit_residual(v, s)));
      EXPECT_LT(worst, 1e-8 * r * r) << "gamma=" << g << " r=" << r;
      EXPECT_TRUE(watertight(m));
      EXPECT_GT(signed_volume(m), 0.0);
    }
}

TEST(Mesh, MirrorSymmetric) {
  for (double g : {0.0, 1.0, 2.0, 5.0})
    for (std::size_t nz : {32u, 33u}) {
      const Mesh m = deformed_sphere_mesh({g, 1.0, nz, 40});
      auto mirrored = m.vertices;
      for (auto& v : mirrored) v[2] = -v[2];
      const auto a = sorted_vertices(m.vertices);
      const auto b = sorted_vertices(mirrored);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[i][k], b[i][k], 1e-12);
    }
}

TEST(Mesh, EvenInGamma) {
  for (double g : {0.5, 2.0, 5.0}) {
    const Mesh a = deformed_sphere_mesh({g, 1.0, 20, 16});
    const Mesh b = deformed_sphere_mesh({-g, 1.0, 20, 16});
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(a.vertices[i][k], b.vertices[i][k], 1e-12);
  }
}

TEST(Mesh, SphereAtGammaZero) {
  for (double r : {1.0, 3.0}) {
    const Mesh m = deformed_sphere_mesh({0.0, r, 40, 40});
    for (const auto& v : m.vertices) {
      EXPECT_NEAR(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]), r, 1e-10);
    }
  }
}

TEST(Mesh, InvalidSpecRejected) {
  EXPECT_THROW(deformed_sphere_mesh({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(deformed_sphere_mesh({1.0, 1.0, 2, 10}), std::invalid_argument);
  EXPECT_THROW(deformed_sphere_mesh({1.0, 1.0, 10, 2}), std::invalid_argument);
}

TEST(MeshIo, ObjIsStableAndComplete) {
  const SurfaceSpec s{2.0, 1.0, 10, 12};
  const Mesh m = deformed_sphere_mesh(s);
  std::ostringstream a, b;
  io::write_obj(a, m, s);
  io::write_obj(b, deformed_sphere_mesh(s), s);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  std::size_t nv = 0, nf = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) ++nv;
    if (line.rfind("f ", 0) == 0) {
      ++nf;
      std::istringstream fs(line.substr(2));
      std::size_t i;
      while (fs >> i) {
        EXPECT_GE(i, 1u);
        EXPECT_LE(i, m.vertices.size());
      }
    }
  }
  EXPECT_EQ(nv, m.vertices.size());
  EXPECT_EQ(nf, m.faces.size());
}

TEST(MeshIo, PointCloudRoundTrips) {
  const Mesh m = deformed_sphere_mesh({1.0, 1.0, 6, 5});
  std::ostringstream os;
  io::write_point_cloud_csv(os, m);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,z");
  std::size_t i = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    for (int k = 0; k < 3; ++k) {
      std::getline(ls, cell, ',');
      EXPECT_EQ(io::parse_double(cell), m.vertices[i][k]);
    }
    ++i;
  }
  EXPECT_EQ(i, m.vertices.size());
}
