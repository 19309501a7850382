// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "oracle/oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

using namespace slfem;
using namespace slfem::oracle;

namespace {

constexpr double kPi = std::numbers::pi;

MaterialModel material(double gamma, FiberAxis axis, double alpha, double beta) {
  return MaterialModel({1.0, 1.0, gamma, axis, alpha, beta});
}

}  // namespace

TEST(Manufactured, Poly2LinearIsotropicForcingIsConstant) {
  const auto mc = build_manufactured(material(0.0, FiberAxis::X, 1.0, 0.0),
                                     ManufacturedKind::Poly2, 0.1);
  const Vec2 f0 = mc.body_force(0.1, 0.2);
  const Vec2 f1 = mc.body_force(0.8, 0.6);
  EXPECT_NEAR(f0.x, f1.x, 1e-14);
  EXPECT_NEAR(f0.y, f1.y, 1e-14);
  EXPECT_NE(f0.x, 0.0);
}

TEST(Manufactured, RigidMotionHasZeroStrainAndForcing) {
  // direct construction: u = translation + infinitesimal rotation
  const auto m = material(0.5, FiberAxis::X, 1.0, 0.5);
  const auto grad = [](double, double) { return Mat2{0.0, 0.02, -0.02, 0.0}; };
  for (const auto& [x, y] : {std::pair{0.3, 0.7}, std::pair{0.9, 0.1}}) {
    const SymTensor2 eps = sym_grad(grad(x, y));
    EXPECT_EQ(frob_norm(eps), 0.0);
    EXPECT_EQ(frob_norm(stress_from_strain(m, eps)), 0.0);
  }
}

TEST(Manufactured, Poly2NonlinearForcingMatchesNumericalDivergence) {
  // cross-check the encoded analytic divergence against an independent
  // finite-difference divergence of the same stress field
  const auto m = material(0.5, FiberAxis::Y, 1.0, 0.4);
  const auto mc = build_manufactured(m, ManufacturedKind::Poly2, 0.1);
  const auto stress_at = [&](double x, double y) {
    return stress_from_strain(m, sym_grad(mc.exact_grad_u(x, y)));
  };
  for (const auto& [x, y] :
       {std::pair{0.3, 0.4}, std::pair{0.7, 0.2}, std::pair{0.5, 0.8}}) {
    const double h = 1e-5;
    const double dsxx_dx =
        (stress_at(x + h, y).xx - stress_at(x - h, y).xx) / (2 * h);
    const double dsxy_dy =
        (stress_at(x, y + h).xy - stress_at(x, y - h).xy) / (2 * h);
    const double dsxy_dx =
        (stress_at(x + h, y).xy - stress_at(x - h, y).xy) / (2 * h);
    const double dsyy_dy =
        (stress_at(x, y + h).yy - stress_at(x, y - h).yy) / (2 * h);
    const Vec2 f = mc.body_force(x, y);
    EXPECT_NEAR(f.x, -(dsxx_dx + dsxy_dy), 1e-8);
    EXPECT_NEAR(f.y, -(dsxy_dx + dsyy_dy), 1e-8);
  }
}

TEST(Manufactured, TrigForcingAgreesWithAnalyticLinearPart) {
  // beta = 0.1 numerical forcing approaches the analytic beta = 0 forcing to
  // first order in beta
  const auto m_lin = material(0.5, FiberAxis::X, 1.0, 0.0);
  const auto m_nl = material(0.5, FiberAxis::X, 1.0, 0.1);
  const double A = 0.05;
  const auto mc = build_manufactured(m_nl, ManufacturedKind::TrigSmooth, A);

  // analytic divergence of E[eps(u)] for the trig-plus-affine field; the
  // affine part has no second derivatives
  const auto f_linear = [&](double x, double y) {
    const double sx = std::sin(kPi * x), cx = std::cos(kPi * x);
    const double sy = std::sin(kPi * y), cy = std::cos(kPi * y);
    const double p2 = kPi * kPi * A;
    const double u1xx = -p2 * sx * sy, u1yy = -p2 * sx * sy,
                 u1xy = p2 * cx * cy;
    const double u2xx = -0.5 * p2 * cx * cy, u2yy = -0.5 * p2 * cx * cy,
                 u2xy = 0.5 * p2 * sx * sy;
    const double mu = m_lin.mu(), la = m_lin.lambda();
    const double gx = m_lin.gamma();  // fiber along x
    const double c11 = 2 * mu + la + gx, c22 = 2 * mu + la;
    const double f1 = -(c11 * u1xx + la * u2xy + mu * (u1yy + u2xy));
    const double f2 = -(mu * (u2xx + u1xy) + la * u1xy + c22 * u2yy);
    return Vec2{f1, f2};
  };

  double worst = 0.0, scale = 0.0;
  for (const auto& [x, y] :
       {std::pair{0.25, 0.3}, std::pair{0.6, 0.7}, std::pair{0.45, 0.5}}) {
    const Vec2 fn = mc.body_force(x, y);
    const Vec2 fl = f_linear(x, y);
    worst = std::max({worst, std::abs(fn.x - fl.x), std::abs(fn.y - fl.y)});
    scale = std::max({scale, std::abs(fl.x), std::abs(fl.y)});
  }
  // first order in beta: the gap is O(beta) ~ 10% of the forcing scale here
  EXPECT_LT(worst, 0.25 * scale);
  EXPECT_GT(worst, 1e-6 * scale);  // and genuinely nonzero
}

TEST(Manufactured, TrigNumericalDivergenceIsHighOrder) {
  // beta = 0: the Richardson divergence must hit the analytic one to <= 1e-9
  const auto m = material(0.5, FiberAxis::X, 1.0, 0.0);
  const auto mc = build_manufactured(m, ManufacturedKind::TrigSmooth, 0.05);
  const double A = 0.05;
  const auto exact_f = [&](double x, double y) {
    const double sx = std::sin(kPi * x), cx = std::cos(kPi * x);
    const double sy = std::sin(kPi * y), cy = std::cos(kPi * y);
    const double p2 = kPi * kPi * A;
    const double mu = m.mu(), la = m.lambda(), gx = m.gamma();
    const double c11 = 2 * mu + la + gx, c22 = 2 * mu + la;
    const double u1xx = -p2 * sx * sy, u1yy = -p2 * sx * sy,
                 u1xy = p2 * cx * cy;
    const double u2xx = -0.5 * p2 * cx * cy, u2yy = -0.5 * p2 * cx * cy,
                 u2xy = 0.5 * p2 * sx * sy;
    return Vec2{-(c11 * u1xx + la * u2xy + mu * (u1yy + u2xy)),
                -(mu * (u2xx + u1xy) + la * u1xy + c22 * u2yy)};
  };
  for (const auto& [x, y] :
       {std::pair{0.31, 0.43}, std::pair{0.62, 0.17}, std::pair{0.5, 0.5}}) {
    const Vec2 fn = mc.body_force(x, y);
    const Vec2 fe = exact_f(x, y);
    const double scale = std::max({std::abs(fe.x), std::abs(fe.y), 1e-3});
    EXPECT_LE(std::abs(fn.x - fe.x) / scale, 1e-9);
    EXPECT_LE(std::abs(fn.y - fe.y) / scale, 1e-9);
  }
}

TEST(Manufactured, RejectsExcessiveAmplitude) {
  EXPECT_THROW(build_manufactured(material(0.5, FiberAxis::X, 1.0, 2.0),
                                  ManufacturedKind::TrigSmooth, 2.0),
               std::invalid_argument);
}

TEST(ConvergenceStudy, BilinearFieldReproducedExactly) {
  // u in the Q1 space itself: the discrete solution matches to solver
  // tolerance on any mesh
  const auto m = material(0.5, FiberAxis::X, 1.0, 0.0);
  ManufacturedCase mc{m, {}, {}, {}, "bilinear"};
  mc.exact_u = [](double x, double y) {
    return Vec2{0.02 * x * y + 0.01 * x, -0.015 * x * y + 0.02 * y};
  };
  mc.exact_grad_u = [](double x, double y) {
    return Mat2{0.02 * y + 0.01, 0.02 * x, -0.015 * y, -0.015 * x + 0.02};
  };
  // E[eps] is affine with constant-coefficient divergence
  const SymTensor2 ex{0.0, -0.015, 0.01};   // d(eps)/dx
  const SymTensor2 ey{0.02, 0.0, -0.0075};  // d(eps)/dy
  const SymTensor2 sx = stiffness_apply(m, ex);
  const SymTensor2 sy = stiffness_apply(m, ey);
  mc.body_force = [sx, sy](double, double) {
    return Vec2{-(sx.xx + sy.xy), -(sx.xy + sy.yy)};
  };

  const QuadMesh mesh = build_plate_mesh(1, 1, 0, 7, 7, 1.0);
  LoadCase load;
  load.body_force = mc.body_force;
  load.dirichlet = boundary_values_from(mesh, mc.exact_u);
  SolverConfig sc;
  sc.method = SolverMethod::Direct;
  const Eigen::VectorXd u = warm_start(mesh, m, load, sc);
  for (int i = 0; i < mesh.num_nodes(); ++i) {
    const Vec2 ue = mc.exact_u(mesh.nodes()[i].x, mesh.nodes()[i].y);
    EXPECT_NEAR(u[2 * i], ue.x, 1e-12);
    EXPECT_NEAR(u[2 * i + 1], ue.y, 1e-12);
  }
}

TEST(ConvergenceStudy, Poly2LinearRates) {
  const auto mc = build_manufactured(material(0.5, FiberAxis::X, 1.0, 0.0),
                                     ManufacturedKind::Poly2, 0.1);
  const int sizes[] = {8, 16, 32};
  const ConvergenceResult r = convergence_study(mc, sizes);
  EXPECT_NEAR(r.l2_rate, 2.0, 0.2);
  EXPECT_NEAR(r.h1_rate, 1.0, 0.2);
}

TEST(ConvergenceStudy, ReportCsvShape) {
  const auto mc = build_manufactured(material(0.5, FiberAxis::Y, 1.0, 0.0),
                                     ManufacturedKind::Poly2, 0.1);
  const int sizes[] = {4, 8, 16};
  const ConvergenceResult r = convergence_study(mc, sizes);
  std::ostringstream os;
  write_verification_csv("poly2", r, os);
  EXPECT_NE(os.str().find("case,h,l2_error,h1_error"), std::string::npos);
  EXPECT_NE(os.str().find("poly2,"), std::string::npos);
}

TEST(ConvergenceStudy, RequiresThreeMeshes) {
  const auto mc = build_manufactured(material(0.5, FiberAxis::X, 1.0, 0.0),
                                     ManufacturedKind::Poly2, 0.1);
  const int sizes[] = {4, 8};
  EXPECT_THROW(convergence_study(mc, sizes), std::invalid_argument);
}

TEST(DenseCholesky, SolvesAndRejectsIndefinite) {
  // 2x2 SPD
  const std::vector<double> a{4.0, 1.0, 1.0, 3.0};
  const std::vector<double> b{1.0, 2.0};
  const auto x = dense_cholesky_solve(a, b);
  EXPECT_NEAR(4.0 * x[0] + x[1], 1.0, 1e-14);
  EXPECT_NEAR(x[0] + 3.0 * x[1], 2.0, 1e-14);
  EXPECT_THROW(dense_cholesky_solve({1.0, 2.0, 2.0, 1.0}, {1.0, 1.0}),
               std::runtime_error);
}

TEST(Norms, H1AndL2OfKnownField) {
  // u = (x, 0): L2^2 = integral x^2 = 1/3, H1^2 = 1/3 + 1 on the unit square
  const QuadMesh mesh = build_plate_mesh(1, 1, 0, 16, 16, 1.0);
  Eigen::VectorXd u(mesh.num_dofs());
  for (int i = 0; i < mesh.num_nodes(); ++i) {
    u[2 * i] = mesh.nodes()[i].x;
    u[2 * i + 1] = 0.0;
  }
  EXPECT_NEAR(l2_norm(mesh, u), std::sqrt(1.0 / 3.0), 1e-10);
  EXPECT_NEAR(h1_norm(mesh, u), std::sqrt(1.0 / 3.0 + 1.0), 1e-10);
}
