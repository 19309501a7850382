// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "slfem/material.hpp"
#include "slfem/mesh.hpp"

namespace slfem {

/// 2x2 Gauss rule on the reference square [-1,1]^2 with the four bilinear
/// shape functions tabulated at each point.
struct ElementQuadrature {
  static constexpr int kPoints = 4;
  static constexpr int kNodes = 4;

  std::array<Vec2, kPoints> points;
  std::array<double, kPoints> weights;
  double shape[kPoints][kNodes];
  double dshape_dxi[kPoints][kNodes];
  double dshape_deta[kPoints][kNodes];

  static const ElementQuadrature& instance();
};

/// Vertical traction profile applied on the top boundary.
enum class LoadType { Uniform, Slope, Sine, Parabolic };

struct LoadProfile {
  LoadType type = LoadType::Uniform;
  double sigma_t = 0.1;

  /// Pointwise traction magnitude (acting in +y) at abscissa x.
  double value_at(double x, double width) const;
};

/// Nullable body force f(x, y).
using BodyForce = std::function<Vec2(double, double)>;

/// Right-hand-side data and essential constraints for one solve.
struct LoadCase {
  std::optional<LoadProfile> traction;  ///< on the Top boundary, +y direction
  BodyForce body_force;                 ///< empty = zero body force
  std::vector<DirichletValue> dirichlet;

  /// The benchmark setup: top traction plus the plate's symmetry constraints.
  static LoadCase benchmark(const QuadMesh& mesh, const LoadProfile& load) {
    return {load, {}, dirichlet_dofs(mesh)};
  }
};

/// Assembled, constrained linear system. Constraints are applied by
/// symmetric elimination: constrained rows/columns are cleared, the moved
/// column contributions are folded into the rhs, and the diagonal is set to 1
/// with rhs equal to the prescribed value. The matrix stays SPD.
struct SparseSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  std::vector<DirichletValue> constraints;
};

struct AssemblyStats {
  ClampCount clamp_events = 0;
};

/// Element stiffness with the stiffening factor frozen at prev_u:
/// K_ij = sum_q w_q detJ_q Psi(s(prev_u)) E[eps(phi_i)] : eps(phi_j).
/// prev_u == nullptr assembles the linear-elastic operator (Psi == 1).
/// Throws std::runtime_error on a non-positive Jacobian.
Eigen::Matrix<double, 8, 8> element_stiffness(const QuadMesh& mesh, int elem,
                                              const MaterialModel& m,
                                              const Eigen::VectorXd* prev_u,
                                              ClampCount* clamps = nullptr);

/// Global assembly of the Picard-linearized system for one iteration.
SparseSystem assemble_system(const QuadMesh& mesh, const MaterialModel& m,
                             const LoadCase& load,
                             const Eigen::VectorXd* prev_u,
                             AssemblyStats* stats = nullptr);

/// Unconstrained external load vector L(phi_i): top traction integrated with
/// 2-point Gauss per edge plus the body-force volume term.
Eigen::VectorXd load_vector(const QuadMesh& mesh, const LoadCase& load);

/// Unconstrained internal force vector a(u; phi_i) with the full nonlinear
/// stiffening evaluated at u.
Eigen::VectorXd internal_force(const QuadMesh& mesh, const MaterialModel& m,
                               const Eigen::VectorXd& u,
                               ClampCount* clamps = nullptr);

/// Force imbalance r = a(u; .) - L(.), zeroed at constrained dofs, and its
/// Euclidean norm.
std::pair<Eigen::VectorXd, double> nonlinear_residual(
    const QuadMesh& mesh, const MaterialModel& m, const LoadCase& load,
    const Eigen::VectorXd& u, ClampCount* clamps = nullptr);

/// Strain of the discrete field u at a quadrature point of an element.
SymTensor2 strain_at_quadrature_point(const QuadMesh& mesh, int elem, int q,
                                      const Eigen::VectorXd& u);

/// Visits every (element, quadrature point) with its physical position,
/// integration weight w*detJ, and the strain of u there.
void for_each_quadrature_strain(
    const QuadMesh& mesh, const Eigen::VectorXd& u,
    const std::function<void(int elem, int q, Vec2 pos, double weight,
                             const SymTensor2& strain)>& visit);

}  // namespace slfem
