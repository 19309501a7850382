// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "slfem/postprocess.hpp"

namespace slfem {

/// Legacy-text VTK export of the mesh alone (points + VTK_QUAD cells, element
/// area as cell data).
void write_vtk_mesh(const QuadMesh& mesh, std::ostream& os);

/// Legacy-text VTK export with point data: displacement vector, stress and
/// strain components, and energy density.
void write_vtk_fields(const QuadMesh& mesh, const NodalFields& fields,
                      const Eigen::VectorXd& u, std::ostream& os);

}  // namespace slfem
