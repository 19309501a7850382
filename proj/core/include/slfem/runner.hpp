// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "slfem/config.hpp"
#include "slfem/vtk.hpp"

namespace slfem {

/// One solved sweep point, file-IO free. Used by the run/compare commands and
/// directly by integration tests.
struct PointResult {
  CaseMetadata meta;
  PicardState picard;
  FieldReport report;
  bool solver_failed = false;
  std::string failure_message;
};

PointResult run_point(const QuadMesh& mesh, const RunConfig& cfg, double alpha,
                      double beta, double sigma_t);

/// Directory name for one sweep point, e.g. "alpha1_beta0.5_sigma0.1".
std::string param_signature(double alpha, double beta, double sigma_t);

/// FNV-1a 64-bit content hash used in the manifest.
std::uint64_t fnv1a_hash(const std::string& bytes);

/// Runs the configured case over the sweep grid, writing per-point
/// convergence/profile/opening CSVs and a VTK field file under
/// output_dir/<case>/<signature>/, plus a manifest listing every artifact
/// with its parameters and content hash. Returns 0 iff every point converged
/// or stagnated.
int run_command(const RunConfig& cfg, std::ostream& log);

/// Side-by-side crack-line comparison of the configured load profiles at each
/// compare.sigma_t level, plus a peak-value summary. Returns 0 on success.
int compare_loads_command(const RunConfig& cfg, std::ostream& log);

/// Prints mesh statistics and writes output_dir/mesh.vtk.
int mesh_info_command(const RunConfig& cfg, std::ostream& out);

}  // namespace slfem
