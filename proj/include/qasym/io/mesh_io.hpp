#pragma once

#include <ostream>

#include "qasym/geometry.hpp"
#include "qasym/io/number_format.hpp"

namespace qasym::io {

/// Wavefront OBJ, 1-based face indices.
inline void write_obj(std::ostream& os, const Mesh& mesh, const SurfaceSpec& spec) {
  os << "# deformed sphere gamma=" << format_double(spec.gamma) << " r=" << format_double(spec.radius)
     << " n_z=" << spec.n_z << " n_phi=" << spec.n_phi << '\n';
  for (const auto& v : mesh.vertices) {
    os << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
  }
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

inline void write_point_cloud_csv(std::ostream& os, const Mesh& mesh) {
  os << "x,y,z\n";
  for (const auto& v : mesh.vertices) {
    os << format_double(v[0]) << ',' << format_double(v[1]) << ',' << format_double(v[2]) << '\n';
  }
}

}  // namespace qasym::io
