// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/vtk.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace slfem {

namespace {

constexpr int kVtkQuad = 9;

void write_header_and_grid(const QuadMesh& mesh, std::ostream& os) {
  os << "# vtk DataFile Version 3.0\n";
  os << "slfem output\n";
  os << "ASCII\n";
  os << "DATASET UNSTRUCTURED_GRID\n";
  char buf[128];
  os << "POINTS " << mesh.num_nodes() << " double\n";
  for (const auto& p : mesh.nodes()) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g 0\n", p.x, p.y);
    os << buf;
  }
  os << "CELLS " << mesh.num_elements() << " " << 5 * mesh.num_elements()
     << "\n";
  for (const auto& conn : mesh.elements())
    os << "4 " << conn[0] << " " << conn[1] << " " << conn[2] << " " << conn[3]
       << "\n";
  os << "CELL_TYPES " << mesh.num_elements() << "\n";
  for (int e = 0; e < mesh.num_elements(); ++e) os << kVtkQuad << "\n";
}

void write_scalars(std::ostream& os, const char* name,
                   const std::vector<double>& values) {
  os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  char buf[64];
  for (const double v : values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    os << buf;
  }
}

}  // namespace

void write_vtk_mesh(const QuadMesh& mesh, std::ostream& os) {
  write_header_and_grid(mesh, os);
  os << "CELL_DATA " << mesh.num_elements() << "\n";
  std::vector<double> area(mesh.num_elements());
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto& c = mesh.elements()[e];
    const Vec2 d1 = mesh.nodes()[c[2]] - mesh.nodes()[c[0]];
    const Vec2 d2 = mesh.nodes()[c[3]] - mesh.nodes()[c[1]];
    area[e] = 0.5 * std::abs(d1.x * d2.y - d1.y * d2.x);
  }
  write_scalars(os, "area", area);
}

void write_vtk_fields(const QuadMesh& mesh, const NodalFields& fields,
                      const Eigen::VectorXd& u, std::ostream& os) {
  write_header_and_grid(mesh, os);
  os << "POINT_DATA " << mesh.num_nodes() << "\n";
  os << "VECTORS displacement double\n";
  char buf[128];
  for (int i = 0; i < mesh.num_nodes(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g 0\n", u[2 * i], u[2 * i + 1]);
    os << buf;
  }

  const int n = mesh.num_nodes();
  std::vector<double> comp(n);
  const auto dump = [&](const char* name, auto&& get) {
    for (int i = 0; i < n; ++i) comp[i] = get(i);
    write_scalars(os, name, comp);
  };
  dump("sigma_xx", [&](int i) { return fields.stress[i].xx; });
  dump("sigma_yy", [&](int i) { return fields.stress[i].yy; });
  dump("sigma_xy", [&](int i) { return fields.stress[i].xy; });
  dump("eps_xx", [&](int i) { return fields.strain[i].xx; });
  dump("eps_yy", [&](int i) { return fields.strain[i].yy; });
  dump("eps_xy", [&](int i) { return fields.strain[i].xy; });
  dump("energy_density", [&](int i) { return fields.energy[i]; });
}

}  // namespace slfem
