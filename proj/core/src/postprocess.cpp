// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/postprocess.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace slfem {

NodalFields recover_fields(const QuadMesh& mesh, const MaterialModel& m,
                           const Eigen::VectorXd& u) {
  NodalFields out;
  const int n = mesh.num_nodes();
  out.stress.assign(n, {});
  out.strain.assign(n, {});
  out.energy.assign(n, 0.0);
  std::vector<double> node_volume(n, 0.0);

  // Element volume averages of the quadrature values, then a volume-weighted
  // average over the elements adjacent to each node.
  std::vector<SymTensor2> elem_stress(mesh.num_elements());
  std::vector<SymTensor2> elem_strain(mesh.num_elements());
  std::vector<double> elem_energy(mesh.num_elements(), 0.0);
  std::vector<double> elem_volume(mesh.num_elements(), 0.0);

  for_each_quadrature_strain(
      mesh, u,
      [&](int e, int /*q*/, Vec2 /*pos*/, double w, const SymTensor2& eps) {
        const SymTensor2 sig = stress_from_strain(m, eps, &out.clamp_events);
        elem_stress[e] = elem_stress[e] + sig * w;
        elem_strain[e] = elem_strain[e] + eps * w;
        elem_energy[e] += w * contract(sig, eps);
        elem_volume[e] += w;
      });

  for (int e = 0; e < mesh.num_elements(); ++e) {
    const double v = elem_volume[e];
    for (const int node : mesh.elements()[e]) {
      out.stress[node] = out.stress[node] + elem_stress[e];
      out.strain[node] = out.strain[node] + elem_strain[e];
      out.energy[node] += elem_energy[e];
      node_volume[node] += v;
    }
  }
  for (int i = 0; i < n; ++i) {
    const double inv = 1.0 / node_volume[i];
    out.stress[i] = out.stress[i] * inv;
    out.strain[i] = out.strain[i] * inv;
    out.energy[i] *= inv;
  }
  return out;
}

namespace {

// Bottom-row nodes (y = 0) with x in [lo, hi], sorted by x.
std::vector<int> bottom_nodes_in(const QuadMesh& mesh, double lo, double hi) {
  const double tol = 1e-12 * std::max(mesh.width(), mesh.height());
  std::vector<int> ids;
  for (int i = 0; i < mesh.num_nodes(); ++i) {
    const Vec2 p = mesh.nodes()[i];
    if (std::abs(p.y) <= tol && p.x >= lo - tol && p.x <= hi + tol)
      ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return mesh.nodes()[a].x < mesh.nodes()[b].x;
  });
  return ids;
}

void write_metadata_header(const CaseMetadata& meta, std::ostream& os) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "# case=%s alpha=%g beta=%g sigma_t=%g fiber=%s load=%s "
                "nx=%d ny=%d\n",
                meta.case_name.c_str(), meta.alpha, meta.beta, meta.sigma_t,
                to_string(meta.fiber), to_string(meta.load), meta.nx, meta.ny);
  os << buf;
}

}  // namespace

std::vector<ProfileRow> crack_line_profile(const QuadMesh& mesh,
                                           const NodalFields& fields) {
  std::vector<ProfileRow> rows;
  for (const int id : bottom_nodes_in(mesh, mesh.crack_length(), mesh.width()))
    rows.push_back({mesh.nodes()[id].x, fields.stress[id].yy,
                    fields.strain[id].yy, fields.energy[id]});
  return rows;
}

std::vector<OpeningRow> crack_opening_profile(const QuadMesh& mesh,
                                              const Eigen::VectorXd& u) {
  std::vector<OpeningRow> rows;
  for (const int id : bottom_nodes_in(mesh, 0.0, mesh.crack_length()))
    rows.push_back({mesh.nodes()[id].x, u[2 * id + 1]});
  return rows;
}

FieldReport make_field_report(const QuadMesh& mesh, const MaterialModel& m,
                              const Eigen::VectorXd& u, CaseMetadata meta) {
  FieldReport report;
  report.meta = std::move(meta);
  const NodalFields fields = recover_fields(mesh, m, u);
  report.profile = crack_line_profile(mesh, fields);
  report.opening = crack_opening_profile(mesh, u);
  return report;
}

double peak_strain(const std::vector<ProfileRow>& profile) {
  double peak = 0.0;
  for (const auto& r : profile) peak = std::max(peak, r.eps_yy);
  return peak;
}

double peak_stress(const std::vector<ProfileRow>& profile) {
  double peak = 0.0;
  for (const auto& r : profile) peak = std::max(peak, r.sigma_yy);
  return peak;
}

double peak_energy(const std::vector<ProfileRow>& profile) {
  double peak = 0.0;
  for (const auto& r : profile) peak = std::max(peak, r.energy);
  return peak;
}

void write_profile_csv(const FieldReport& report, std::ostream& os) {
  write_metadata_header(report.meta, os);
  os << "x,sigma_yy,eps_yy,energy\n";
  char buf[160];
  for (const auto& r : report.profile) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", r.x,
                  r.sigma_yy, r.eps_yy, r.energy);
    os << buf;
  }
}

void write_opening_csv(const FieldReport& report, std::ostream& os) {
  write_metadata_header(report.meta, os);
  os << "x,u_y\n";
  char buf[96];
  for (const auto& r : report.opening) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", r.x, r.u_y);
    os << buf;
  }
}

const char* to_string(FiberAxis axis) {
  return axis == FiberAxis::X ? "x" : "y";
}

const char* to_string(LoadType type) {
  switch (type) {
    case LoadType::Uniform:
      return "uniform";
    case LoadType::Slope:
      return "slope";
    case LoadType::Sine:
      return "sine";
    case LoadType::Parabolic:
      return "parabolic";
  }
  return "?";
}

}  // namespace slfem
