// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "slfem/tensor.hpp"

namespace slfem {

/// Boundary segments of the cracked plate. The bottom edge y = 0 is split at
/// the crack tip into the traction-free crack face (x < crack length) and the
/// symmetry ligament (x > crack length).
enum class BoundaryTag : int {
  Right = 0,
  Crack = 1,
  BottomLigament = 2,
  Top = 3,
  Left = 4,
};

struct BoundaryEdge {
  int element;     ///< owning element index
  int local_edge;  ///< 0 = bottom, 1 = right, 2 = top, 3 = left (ccw)
  BoundaryTag tag;
};

/// One prescribed displacement dof: dof = 2*node for u_x, 2*node+1 for u_y.
struct DirichletValue {
  int dof;
  double value;
};

/// Structured quadrilateral mesh of the rectangular plate [0,w] x [0,h] with
/// an edge crack along y = 0, 0 <= x <= crack_length. Immutable once built.
class QuadMesh {
 public:
  QuadMesh(std::vector<Vec2> nodes, std::vector<std::array<int, 4>> elements,
           std::vector<BoundaryEdge> boundary_edges, Vec2 crack_tip,
           double width, double height, double crack_length, int nx, int ny);

  const std::vector<Vec2>& nodes() const { return nodes_; }
  const std::vector<std::array<int, 4>>& elements() const { return elements_; }
  const std::vector<BoundaryEdge>& boundary_edges() const {
    return boundary_edges_;
  }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_elements() const { return static_cast<int>(elements_.size()); }
  int num_dofs() const { return 2 * num_nodes(); }

  Vec2 crack_tip() const { return crack_tip_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double crack_length() const { return crack_length_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  /// Largest element diameter.
  double h_max() const { return h_max_; }
  /// Smallest element edge length.
  double h_min() const { return h_min_; }

  /// Endpoint node ids of a boundary edge, in ccw element order.
  std::array<int, 2> edge_nodes(const BoundaryEdge& e) const {
    const auto& conn = elements_[e.element];
    return {conn[e.local_edge], conn[(e.local_edge + 1) % 4]};
  }

 private:
  std::vector<Vec2> nodes_;
  std::vector<std::array<int, 4>> elements_;
  std::vector<BoundaryEdge> boundary_edges_;
  Vec2 crack_tip_;
  double width_, height_, crack_length_;
  int nx_, ny_;
  double h_max_ = 0.0, h_min_ = 0.0;
};

/// Builds the (nx x ny)-element tensor-product mesh of [0,width] x [0,height].
///
/// A column of grid lines passes exactly through x = crack_length: the x axis
/// is partitioned into [0, crack] and [crack, width] segments meshed
/// separately. grading >= 1 grades element sizes geometrically toward the
/// crack tip column (from both sides) and toward y = 0, with size ratio
/// h_max/h_min = grading per direction. crack_length = 0 builds the
/// crack-free plate (the whole bottom is the symmetry ligament).
///
/// Throws std::invalid_argument on crack_length outside [0, width), nx or
/// ny < 2 (< 1 for the crack-free plate), or grading < 1.
QuadMesh build_plate_mesh(double width, double height, double crack_length,
                          int nx, int ny, double grading = 1.0);

/// Benchmark constraints: u_x = 0 on the left boundary, u_y = 0 on the bottom
/// ligament (x >= crack_length, including the crack-tip node). Crack-face
/// nodes are unconstrained.
std::vector<DirichletValue> dirichlet_dofs(const QuadMesh& mesh);

}  // namespace slfem
