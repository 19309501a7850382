// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slfem {

namespace {

// Coordinates of n+1 grid lines over [0, length] with cell widths in
// geometric progression, smallest cell at the `toward_start` end. The ratio
// between the largest and smallest cell is exactly `grading`. Endpoints are
// pinned exactly to 0 and length.
std::vector<double> graded_axis(double length, int n, double grading,
                                bool toward_start) {
  std::vector<double> x(static_cast<size_t>(n) + 1);
  if (n == 1 || grading == 1.0) {
    for (int i = 0; i <= n; ++i)
      x[i] = length * static_cast<double>(i) / static_cast<double>(n);
  } else {
    const double q = std::pow(grading, 1.0 / static_cast<double>(n - 1));
    const double c = length * (q - 1.0) / (std::pow(q, n) - 1.0);
    x[0] = 0.0;
    double w = toward_start ? c : c * std::pow(q, n - 1);
    for (int i = 1; i <= n; ++i) {
      x[i] = x[i - 1] + w;
      w = toward_start ? w * q : w / q;
    }
  }
  x[0] = 0.0;
  x[n] = length;
  return x;
}

}  // namespace

QuadMesh::QuadMesh(std::vector<Vec2> nodes,
                   std::vector<std::array<int, 4>> elements,
                   std::vector<BoundaryEdge> boundary_edges, Vec2 crack_tip,
                   double width, double height, double crack_length, int nx,
                   int ny)
    : nodes_(std::move(nodes)),
      elements_(std::move(elements)),
      boundary_edges_(std::move(boundary_edges)),
      crack_tip_(crack_tip),
      width_(width),
      height_(height),
      crack_length_(crack_length),
      nx_(nx),
      ny_(ny) {
  h_min_ = std::numeric_limits<double>::max();
  for (const auto& conn : elements_) {
    const Vec2 d0 = nodes_[conn[2]] - nodes_[conn[0]];
    const Vec2 d1 = nodes_[conn[3]] - nodes_[conn[1]];
    h_max_ = std::max({h_max_, d0.norm(), d1.norm()});
    for (int k = 0; k < 4; ++k)
      h_min_ = std::min(h_min_, (nodes_[conn[(k + 1) % 4]] - nodes_[conn[k]]).norm());
  }
}

QuadMesh build_plate_mesh(double width, double height, double crack_length,
                          int nx, int ny, double grading) {
  if (!(width > 0.0) || !(height > 0.0))
    throw std::invalid_argument("build_plate_mesh: plate dimensions must be > 0");
  if (crack_length < 0.0 || crack_length >= width)
    throw std::invalid_argument(
        "build_plate_mesh: crack_length must lie in [0, width)");
  if (!(grading >= 1.0))
    throw std::invalid_argument("build_plate_mesh: grading must be >= 1");
  const bool cracked = crack_length > 0.0;
  if (nx < (cracked ? 2 : 1) || ny < 1)
    throw std::invalid_argument("build_plate_mesh: too few subdivisions");

  // x grid: mesh [0, crack] and [crack, width] separately so a grid line
  // lies exactly on the crack tip; sizes shrink toward the tip from both
  // sides. y grid shrinks toward the crack plane y = 0.
  std::vector<double> xs;
  if (cracked) {
    const int nl = std::clamp(
        static_cast<int>(std::lround(nx * crack_length / width)), 1, nx - 1);
    const int nr = nx - nl;
    xs = graded_axis(crack_length, nl, grading, false);
    const auto right = graded_axis(width - crack_length, nr, grading, true);
    for (int i = 1; i <= nr; ++i) xs.push_back(crack_length + right[i]);
    xs[static_cast<size_t>(nx)] = width;
  } else {
    xs = graded_axis(width, nx, grading, true);
  }
  const std::vector<double> ys = graded_axis(height, ny, grading, true);

  std::vector<Vec2> nodes(static_cast<size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      nodes[static_cast<size_t>(j) * (nx + 1) + i] = {xs[i], ys[j]};

  const auto node_id = [nx](int i, int j) { return j * (nx + 1) + i; };

  std::vector<std::array<int, 4>> elements;
  elements.reserve(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      elements.push_back({node_id(i, j), node_id(i + 1, j), node_id(i + 1, j + 1),
                          node_id(i, j + 1)});

  const auto elem_id = [nx](int i, int j) { return j * nx + i; };

  std::vector<BoundaryEdge> edges;
  edges.reserve(2 * (static_cast<size_t>(nx) + ny));
  for (int i = 0; i < nx; ++i) {
    const double mid = 0.5 * (xs[i] + xs[i + 1]);
    edges.push_back({elem_id(i, 0), 0,
                     cracked && mid < crack_length ? BoundaryTag::Crack
                                                   : BoundaryTag::BottomLigament});
    edges.push_back({elem_id(i, ny - 1), 2, BoundaryTag::Top});
  }
  for (int j = 0; j < ny; ++j) {
    edges.push_back({elem_id(nx - 1, j), 1, BoundaryTag::Right});
    edges.push_back({elem_id(0, j), 3, BoundaryTag::Left});
  }

  const Vec2 tip{crack_length, 0.0};
  return QuadMesh(std::move(nodes), std::move(elements), std::move(edges), tip,
                  width, height, crack_length, nx, ny);
}

std::vector<DirichletValue> dirichlet_dofs(const QuadMesh& mesh) {
  // Grid coordinates are exact at x = 0, y = 0 and at the crack-tip column,
  // so a tiny tolerance suffices.
  const double tol = 1e-12 * std::max(mesh.width(), mesh.height());
  std::vector<DirichletValue> out;
  const auto& nodes = mesh.nodes();
  for (int n = 0; n < mesh.num_nodes(); ++n) {
    if (std::abs(nodes[n].x) <= tol) out.push_back({2 * n, 0.0});
    if (std::abs(nodes[n].y) <= tol && nodes[n].x >= mesh.crack_length() - tol)
      out.push_back({2 * n + 1, 0.0});
  }
  return out;
}

}  // namespace slfem
