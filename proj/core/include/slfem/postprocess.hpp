// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slfem/assembly.hpp"

namespace slfem {

/// Nodal stress/strain/energy fields recovered from a converged displacement
/// by volume-weighted averaging of the element quadrature values.
struct NodalFields {
  std::vector<SymTensor2> stress;
  std::vector<SymTensor2> strain;
  std::vector<double> energy;
  ClampCount clamp_events = 0;
};

NodalFields recover_fields(const QuadMesh& mesh, const MaterialModel& m,
                           const Eigen::VectorXd& u);

struct ProfileRow {
  double x;
  double sigma_yy;
  double eps_yy;
  double energy;
};

struct OpeningRow {
  double x;
  double u_y;
};

/// Run identification attached to every artifact.
struct CaseMetadata {
  std::string case_name;
  double alpha = 1.0;
  double beta = 1.0;
  double sigma_t = 0.1;
  FiberAxis fiber = FiberAxis::X;
  LoadType load = LoadType::Slope;
  int nx = 0;
  int ny = 0;
};

/// Line profiles keyed by sampling abscissa: the ligament ahead of the tip
/// and the crack-face opening from mouth to tip.
struct FieldReport {
  CaseMetadata meta;
  std::vector<ProfileRow> profile;   ///< y = 0, x >= crack length, ascending
  std::vector<OpeningRow> opening;   ///< y = 0, 0 <= x <= crack length
};

/// Nodal values along y = 0 ahead of the crack tip, ordered by x starting at
/// the tip abscissa.
std::vector<ProfileRow> crack_line_profile(const QuadMesh& mesh,
                                           const NodalFields& fields);

/// Vertical displacement of the crack-face nodes, mouth to tip. The tip value
/// is exactly zero (constrained dof).
std::vector<OpeningRow> crack_opening_profile(const QuadMesh& mesh,
                                              const Eigen::VectorXd& u);

FieldReport make_field_report(const QuadMesh& mesh, const MaterialModel& m,
                              const Eigen::VectorXd& u, CaseMetadata meta);

/// Largest eps_yy in the profile; the tip-severity measure used by the
/// parametric studies.
double peak_strain(const std::vector<ProfileRow>& profile);
double peak_stress(const std::vector<ProfileRow>& profile);
double peak_energy(const std::vector<ProfileRow>& profile);

void write_profile_csv(const FieldReport& report, std::ostream& os);
void write_opening_csv(const FieldReport& report, std::ostream& os);

const char* to_string(FiberAxis axis);
const char* to_string(LoadType type);

}  // namespace slfem
