// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/assembly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace slfem {

namespace {

// Local dof layout per element: [ux0, uy0, ux1, uy1, ux2, uy2, ux3, uy3].
struct QpGeometry {
  double det;        // Jacobian determinant
  double dnx[4];     // physical shape gradients
  double dny[4];
  Vec2 pos;          // physical quadrature-point position
};

QpGeometry map_point(const QuadMesh& mesh, const std::array<int, 4>& conn,
                     const ElementQuadrature& quad, int q, int elem) {
  QpGeometry g{};
  double j00 = 0, j01 = 0, j10 = 0, j11 = 0;
  for (int i = 0; i < 4; ++i) {
    const Vec2 p = mesh.nodes()[conn[i]];
    j00 += p.x * quad.dshape_dxi[q][i];
    j01 += p.x * quad.dshape_deta[q][i];
    j10 += p.y * quad.dshape_dxi[q][i];
    j11 += p.y * quad.dshape_deta[q][i];
    g.pos.x += p.x * quad.shape[q][i];
    g.pos.y += p.y * quad.shape[q][i];
  }
  g.det = j00 * j11 - j01 * j10;
  if (!(g.det > 0.0))
    throw std::runtime_error("assembly: non-positive Jacobian in element " +
                             std::to_string(elem));
  for (int i = 0; i < 4; ++i) {
    g.dnx[i] = (j11 * quad.dshape_dxi[q][i] - j10 * quad.dshape_deta[q][i]) / g.det;
    g.dny[i] = (-j01 * quad.dshape_dxi[q][i] + j00 * quad.dshape_deta[q][i]) / g.det;
  }
  return g;
}

// Strain of the vector shape function for (local node i, component d).
SymTensor2 basis_strain(const QpGeometry& g, int i, int d) {
  if (d == 0) return {g.dnx[i], 0.0, 0.5 * g.dny[i]};
  return {0.0, g.dny[i], 0.5 * g.dnx[i]};
}

SymTensor2 field_strain(const QpGeometry& g, const std::array<int, 4>& conn,
                        const Eigen::VectorXd& u) {
  SymTensor2 e;
  for (int i = 0; i < 4; ++i) {
    const double ux = u[2 * conn[i]];
    const double uy = u[2 * conn[i] + 1];
    e.xx += ux * g.dnx[i];
    e.yy += uy * g.dny[i];
    e.xy += 0.5 * (ux * g.dny[i] + uy * g.dnx[i]);
  }
  return e;
}

}  // namespace

const ElementQuadrature& ElementQuadrature::instance() {
  static const ElementQuadrature quad = [] {
    ElementQuadrature q{};
    const double a = 1.0 / std::sqrt(3.0);
    const double xi_n[4] = {-1.0, 1.0, 1.0, -1.0};   // ccw reference corners
    const double eta_n[4] = {-1.0, -1.0, 1.0, 1.0};
    const double xi_q[4] = {-a, a, a, -a};
    const double eta_q[4] = {-a, -a, a, a};
    for (int p = 0; p < kPoints; ++p) {
      q.points[p] = {xi_q[p], eta_q[p]};
      q.weights[p] = 1.0;
      for (int i = 0; i < kNodes; ++i) {
        q.shape[p][i] =
            0.25 * (1.0 + xi_q[p] * xi_n[i]) * (1.0 + eta_q[p] * eta_n[i]);
        q.dshape_dxi[p][i] = 0.25 * xi_n[i] * (1.0 + eta_q[p] * eta_n[i]);
        q.dshape_deta[p][i] = 0.25 * eta_n[i] * (1.0 + xi_q[p] * xi_n[i]);
      }
    }
    return q;
  }();
  return quad;
}

double LoadProfile::value_at(double x, double width) const {
  switch (type) {
    case LoadType::Uniform:
      return sigma_t;
    case LoadType::Slope:
      return sigma_t * (0.1 + 0.1 * x);
    case LoadType::Sine:
      return sigma_t * std::sin(std::numbers::pi * x) / 8.0;
    case LoadType::Parabolic:
      return sigma_t * x * (width - x) / (width * width);
  }
  return 0.0;
}

Eigen::Matrix<double, 8, 8> element_stiffness(const QuadMesh& mesh, int elem,
                                              const MaterialModel& m,
                                              const Eigen::VectorXd* prev_u,
                                              ClampCount* clamps) {
  const auto& quad = ElementQuadrature::instance();
  const auto& conn = mesh.elements()[elem];
  Eigen::Matrix<double, 8, 8> ke = Eigen::Matrix<double, 8, 8>::Zero();

  for (int q = 0; q < ElementQuadrature::kPoints; ++q) {
    const QpGeometry g = map_point(mesh, conn, quad, q, elem);
    double factor = quad.weights[q] * g.det;
    if (prev_u) {
      const SymTensor2 eps_prev = field_strain(g, conn, *prev_u);
      factor *= psi(m, energy_seminorm(m, eps_prev), clamps);
    }
    SymTensor2 eps[8], sig[8];
    for (int j = 0; j < 8; ++j) {
      eps[j] = basis_strain(g, j / 2, j % 2);
      sig[j] = stiffness_apply(m, eps[j]);
    }
    for (int j = 0; j < 8; ++j)
      for (int i = j; i < 8; ++i) {
        const double v = factor * contract(eps[i], sig[j]);
        ke(i, j) += v;
        if (i != j) ke(j, i) += v;
      }
  }
  return ke;
}

Eigen::VectorXd load_vector(const QuadMesh& mesh, const LoadCase& load) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(mesh.num_dofs());
  const double gauss = 1.0 / std::sqrt(3.0);

  if (load.traction) {
    for (const auto& edge : mesh.boundary_edges()) {
      if (edge.tag != BoundaryTag::Top) continue;
      const auto [n0, n1] = mesh.edge_nodes(edge);
      const Vec2 p0 = mesh.nodes()[n0];
      const Vec2 p1 = mesh.nodes()[n1];
      const double half_len = 0.5 * (p1 - p0).norm();
      for (const double t : {-gauss, gauss}) {
        const double x = 0.5 * ((1.0 - t) * p0.x + (1.0 + t) * p1.x);
        const double q = load.traction->value_at(x, mesh.width());
        b[2 * n0 + 1] += half_len * 0.5 * (1.0 - t) * q;
        b[2 * n1 + 1] += half_len * 0.5 * (1.0 + t) * q;
      }
    }
  }

  if (load.body_force) {
    const auto& quad = ElementQuadrature::instance();
    for (int e = 0; e < mesh.num_elements(); ++e) {
      const auto& conn = mesh.elements()[e];
      for (int q = 0; q < ElementQuadrature::kPoints; ++q) {
        const QpGeometry g = map_point(mesh, conn, quad, q, e);
        const Vec2 f = load.body_force(g.pos.x, g.pos.y);
        for (int i = 0; i < 4; ++i) {
          const double w = quad.weights[q] * g.det * quad.shape[q][i];
          b[2 * conn[i]] += w * f.x;
          b[2 * conn[i] + 1] += w * f.y;
        }
      }
    }
  }
  return b;
}

SparseSystem assemble_system(const QuadMesh& mesh, const MaterialModel& m,
                             const LoadCase& load, const Eigen::VectorXd* prev_u,
                             AssemblyStats* stats) {
  const int n = mesh.num_dofs();
  ClampCount clamps = 0;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(mesh.num_elements()) * 64 +
                   load.dirichlet.size());
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto ke = element_stiffness(mesh, e, m, prev_u, &clamps);
    const auto& conn = mesh.elements()[e];
    int dofs[8];
    for (int i = 0; i < 4; ++i) {
      dofs[2 * i] = 2 * conn[i];
      dofs[2 * i + 1] = 2 * conn[i] + 1;
    }
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        triplets.emplace_back(dofs[i], dofs[j], ke(i, j));
  }

  Eigen::VectorXd rhs = load_vector(mesh, load);

  // Symmetric elimination of the essential constraints. The assembled
  // triplet list contains both (i,j) and (j,i), so dropping constrained rows
  // and folding constrained columns into the rhs keeps the matrix symmetric.
  std::unordered_map<int, double> fixed;
  fixed.reserve(load.dirichlet.size());
  for (const auto& d : load.dirichlet) fixed[d.dof] = d.value;

  std::vector<Eigen::Triplet<double>> kept;
  kept.reserve(triplets.size());
  for (const auto& t : triplets) {
    const bool row_fixed = fixed.count(t.row()) != 0;
    const bool col_fixed = fixed.count(t.col()) != 0;
    if (!row_fixed && !col_fixed) {
      kept.push_back(t);
    } else if (!row_fixed && col_fixed) {
      rhs[t.row()] -= t.value() * fixed[t.col()];
    }
  }
  for (const auto& [dof, value] : fixed) {
    kept.emplace_back(dof, dof, 1.0);
    rhs[dof] = value;
  }

  SparseSystem sys;
  sys.matrix.resize(n, n);
  sys.matrix.setFromTriplets(kept.begin(), kept.end());
  sys.matrix.makeCompressed();
  sys.rhs = std::move(rhs);
  sys.constraints = load.dirichlet;
  if (stats) stats->clamp_events += clamps;
  return sys;
}

Eigen::VectorXd internal_force(const QuadMesh& mesh, const MaterialModel& m,
                               const Eigen::VectorXd& u, ClampCount* clamps) {
  const auto& quad = ElementQuadrature::instance();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(mesh.num_dofs());
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto& conn = mesh.elements()[e];
    for (int q = 0; q < ElementQuadrature::kPoints; ++q) {
      const QpGeometry g = map_point(mesh, conn, quad, q, e);
      const SymTensor2 stress =
          stress_from_strain(m, field_strain(g, conn, u), clamps);
      const double w = quad.weights[q] * g.det;
      for (int i = 0; i < 4; ++i) {
        f[2 * conn[i]] += w * contract(basis_strain(g, i, 0), stress);
        f[2 * conn[i] + 1] += w * contract(basis_strain(g, i, 1), stress);
      }
    }
  }
  return f;
}

std::pair<Eigen::VectorXd, double> nonlinear_residual(const QuadMesh& mesh,
                                                      const MaterialModel& m,
                                                      const LoadCase& load,
                                                      const Eigen::VectorXd& u,
                                                      ClampCount* clamps) {
  Eigen::VectorXd r = internal_force(mesh, m, u, clamps) - load_vector(mesh, load);
  for (const auto& d : load.dirichlet) r[d.dof] = 0.0;
  const double norm = r.norm();
  return {std::move(r), norm};
}

SymTensor2 strain_at_quadrature_point(const QuadMesh& mesh, int elem, int q,
                                      const Eigen::VectorXd& u) {
  const auto& conn = mesh.elements()[elem];
  const QpGeometry g =
      map_point(mesh, conn, ElementQuadrature::instance(), q, elem);
  return field_strain(g, conn, u);
}

void for_each_quadrature_strain(
    const QuadMesh& mesh, const Eigen::VectorXd& u,
    const std::function<void(int, int, Vec2, double, const SymTensor2&)>&
        visit) {
  const auto& quad = ElementQuadrature::instance();
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto& conn = mesh.elements()[e];
    for (int q = 0; q < ElementQuadrature::kPoints; ++q) {
      const QpGeometry g = map_point(mesh, conn, quad, q, e);
      visit(e, q, g.pos, quad.weights[q] * g.det, field_strain(g, conn, u));
    }
  }
}

}  // namespace slfem
