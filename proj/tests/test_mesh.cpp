// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/mesh.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace slfem;

TEST(BuildPlateMesh, TwoElementExample) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 2, 1, 1.0);
  EXPECT_EQ(mesh.num_elements(), 2);
  EXPECT_EQ(mesh.num_nodes(), 6);
  std::vector<BoundaryTag> bottom;
  for (const auto& e : mesh.boundary_edges())
    if (e.tag == BoundaryTag::Crack || e.tag == BoundaryTag::BottomLigament)
      bottom.push_back(e.tag);
  ASSERT_EQ(bottom.size(), 2u);
  EXPECT_EQ(bottom[0], BoundaryTag::Crack);
  EXPECT_EQ(bottom[1], BoundaryTag::BottomLigament);
  EXPECT_DOUBLE_EQ(mesh.crack_tip().x, 1.0);
  EXPECT_DOUBLE_EQ(mesh.crack_tip().y, 0.0);
}

TEST(BuildPlateMesh, UniformNodeCount) {
  for (const int n : {2, 4, 8}) {
    const QuadMesh mesh = build_plate_mesh(1.0, 1.0, 0.5, n, n, 1.0);
    EXPECT_EQ(mesh.num_nodes(), (n + 1) * (n + 1));
    EXPECT_EQ(mesh.num_elements(), n * n);
  }
}

TEST(BuildPlateMesh, GridLinePassesThroughCrackTip) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 13, 7, 2.5);
  bool found = false;
  for (const auto& p : mesh.nodes())
    if (p.x == 1.0 && p.y == 0.0) found = true;
  EXPECT_TRUE(found);
}

TEST(BuildPlateMesh, GradingRatioMatchesLaw) {
  // Per direction the largest/smallest cell ratio equals the grading factor;
  // the smallest element sits at the crack tip.
  const double g = 3.0;
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 16, 8, g);
  std::vector<double> xs;
  for (const auto& p : mesh.nodes())
    if (p.y == 0.0) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  // left segment [0,1]: 8 cells shrinking toward x=1
  std::vector<double> w;
  for (int i = 0; i + 1 < 9; ++i) w.push_back(xs[i + 1] - xs[i]);
  for (size_t i = 0; i + 1 < w.size(); ++i) EXPECT_GT(w[i], w[i + 1]);
  EXPECT_NEAR(w.front() / w.back(), g, 1e-9);

  // smallest elements are adjacent to the tip
  const double min_cell = *std::min_element(w.begin(), w.end());
  EXPECT_DOUBLE_EQ(min_cell, w.back());
}

TEST(BuildPlateMesh, RefinementHalvesH) {
  const QuadMesh coarse = build_plate_mesh(2.0, 1.0, 1.0, 8, 4, 1.0);
  const QuadMesh fine = build_plate_mesh(2.0, 1.0, 1.0, 16, 8, 1.0);
  EXPECT_NEAR(fine.h_max(), 0.5 * coarse.h_max(), 1e-12);
}

TEST(BuildPlateMesh, BoundaryLengthsSumToPerimeter) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 12, 6, 2.0);
  double total = 0.0;
  for (const auto& e : mesh.boundary_edges()) {
    const auto [a, b] = mesh.edge_nodes(e);
    total += (mesh.nodes()[b] - mesh.nodes()[a]).norm();
  }
  EXPECT_NEAR(total, 2.0 * (2.0 + 1.0), 1e-12);
}

TEST(BuildPlateMesh, TagsPartitionBoundary) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 10, 5, 1.5);
  std::map<BoundaryTag, double> length;
  for (const auto& e : mesh.boundary_edges()) {
    const auto [a, b] = mesh.edge_nodes(e);
    length[e.tag] += (mesh.nodes()[b] - mesh.nodes()[a]).norm();
  }
  EXPECT_NEAR(length[BoundaryTag::Crack], 1.0, 1e-12);
  EXPECT_NEAR(length[BoundaryTag::BottomLigament], 1.0, 1e-12);
  EXPECT_NEAR(length[BoundaryTag::Top], 2.0, 1e-12);
  EXPECT_NEAR(length[BoundaryTag::Left], 1.0, 1e-12);
  EXPECT_NEAR(length[BoundaryTag::Right], 1.0, 1e-12);
}

TEST(BuildPlateMesh, PositiveJacobianCornersEverywhere) {
  // Axis-aligned cells: the corner Jacobian is the cell area / 4 > 0. Check
  // via the cross product of adjacent edge vectors at each corner.
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 9, 5, 4.0);
  for (const auto& conn : mesh.elements()) {
    for (int k = 0; k < 4; ++k) {
      const Vec2 p = mesh.nodes()[conn[k]];
      const Vec2 a = mesh.nodes()[conn[(k + 1) % 4]] - p;
      const Vec2 b = mesh.nodes()[conn[(k + 3) % 4]] - p;
      EXPECT_GT(a.x * b.y - a.y * b.x, 0.0);
    }
  }
}

TEST(BuildPlateMesh, CrackFreePlate) {
  const QuadMesh mesh = build_plate_mesh(1.0, 1.0, 0.0, 4, 4, 1.0);
  for (const auto& e : mesh.boundary_edges())
    EXPECT_NE(e.tag, BoundaryTag::Crack);
}

TEST(BuildPlateMesh, RejectsBadArguments) {
  EXPECT_THROW(build_plate_mesh(2, 1, 2.0, 4, 2, 1), std::invalid_argument);
  EXPECT_THROW(build_plate_mesh(2, 1, -0.1, 4, 2, 1), std::invalid_argument);
  EXPECT_THROW(build_plate_mesh(2, 1, 1.0, 1, 2, 1), std::invalid_argument);
  EXPECT_THROW(build_plate_mesh(2, 1, 1.0, 4, 2, 0.5), std::invalid_argument);
}

TEST(DirichletDofs, TwoElementExample) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 2, 1, 1.0);
  const auto dofs = dirichlet_dofs(mesh);
  int horizontal = 0, vertical = 0;
  for (const auto& d : dofs) {
    EXPECT_DOUBLE_EQ(d.value, 0.0);
    (d.dof % 2 == 0 ? horizontal : vertical)++;
  }
  EXPECT_EQ(horizontal, 2);  // left column x = 0
  EXPECT_EQ(vertical, 2);    // ligament nodes x >= 1 on y = 0
}

TEST(DirichletDofs, CrackFaceIsFree) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 4, 2, 1.0);
  // node at (0.5, 0) lies on the crack face
  int crack_node = -1;
  for (int i = 0; i < mesh.num_nodes(); ++i)
    if (mesh.nodes()[i].x == 0.5 && mesh.nodes()[i].y == 0.0) crack_node = i;
  ASSERT_GE(crack_node, 0);
  for (const auto& d : dirichlet_dofs(mesh))
    EXPECT_NE(d.dof, 2 * crack_node + 1);
}

TEST(DirichletDofs, CrackTipIsVerticallyConstrained) {
  const QuadMesh mesh = build_plate_mesh(2.0, 1.0, 1.0, 4, 2, 1.0);
  int tip = -1;
  for (int i = 0; i < mesh.num_nodes(); ++i)
    if (mesh.nodes()[i].x == 1.0 && mesh.nodes()[i].y == 0.0) tip = i;
  ASSERT_GE(tip, 0);
  bool vertical = false, horizontal = false;
  for (const auto& d : dirichlet_dofs(mesh)) {
    if (d.dof == 2 * tip + 1) vertical = true;
    if (d.dof == 2 * tip) horizontal = true;
  }
  EXPECT_TRUE(vertical);
  EXPECT_FALSE(horizontal);
}

TEST(DirichletDofs, CrackFreeCornerCarriesBoth) {
  const QuadMesh mesh = build_plate_mesh(1.0, 1.0, 0.0, 3, 3, 1.0);
  int corner = -1;
  for (int i = 0; i < mesh.num_nodes(); ++i)
    if (mesh.nodes()[i].x == 0.0 && mesh.nodes()[i].y == 0.0) corner = i;
  ASSERT_GE(corner, 0);
  bool u1 = false, u2 = false;
  for (const auto& d : dirichlet_dofs(mesh)) {
    if (d.dof == 2 * corner) u1 = true;
    if (d.dof == 2 * corner + 1) u2 = true;
  }
  EXPECT_TRUE(u1 && u2);
}
