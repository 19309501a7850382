// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "slfem/picard.hpp"
#include "slfem/postprocess.hpp"

namespace slfem {

/// Benchmark presets. Case1*/Case2* pin the load profile (slope/sine) and the
/// fiber axis (a = along the crack, b = orthogonal); Uniform* pin the uniform
/// load; Custom takes everything from the config file.
enum class CaseKind { Case1a, Case1b, Case2a, Case2b, UniformX, UniformY, Custom };

struct MeshOptions {
  double width = 2.0;
  double height = 1.0;
  double crack_length = 1.0;
  int nx = 64;
  int ny = 32;
  double grading = 4.0;
};

/// Optional one-axis-at-a-time parameter sweeps; empty lists mean "use the
/// single configured value".
struct SweepSpec {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> sigma_t;
};

struct RunConfig {
  CaseKind kind = CaseKind::Case1a;
  MaterialParams material;
  LoadProfile load{LoadType::Slope, 0.1};
  MeshOptions mesh;
  SolverConfig solver;
  PicardConfig picard;
  SweepSpec sweep;
  std::string output_dir = "out";
  int threads = 1;
  unsigned seed = 0;  ///< reserved for property-test utilities

  // compare-loads inputs
  std::vector<LoadType> compare_loads{LoadType::Uniform, LoadType::Slope,
                                      LoadType::Sine};
  std::vector<double> compare_sigma_t{0.001, 0.01, 0.1};
};

/// Parses the flat `section.key = value` config format ('#' comments, blank
/// lines ignored), applies SLFEM_* environment overrides, enforces the case
/// presets, and validates. Throws std::invalid_argument naming the offending
/// field.
RunConfig parse_config_file(const std::string& path);

/// Same, from config text (used by tests and the env-override path).
RunConfig parse_config_text(const std::string& text);

const char* to_string(CaseKind kind);

/// Environment variable name that overrides a config key: `material.mu` ->
/// `SLFEM_MATERIAL_MU`.
std::string env_var_for_key(const std::string& key);

}  // namespace slfem
