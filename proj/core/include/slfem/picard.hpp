// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <vector>

#include "slfem/solver.hpp"

namespace slfem {

struct PicardConfig {
  double tol = 1e-6;          ///< residual-norm convergence tolerance
  int max_iter = 10;
  int stagnation_window = 3;  ///< consecutive small changes that end the loop
  double stagnation_rel = 1e-3;
};

enum class PicardStatus { ConvergedTol, Stagnated, MaxIter };

struct ResidualRecord {
  int iteration;
  double norm;
  ClampCount clamp_events;  ///< stiffening clamps hit during this iteration
};

struct PicardState {
  Eigen::VectorXd u;
  Eigen::VectorXd previous_u;
  std::vector<ResidualRecord> residual_history;
  PicardStatus status = PicardStatus::MaxIter;
};

/// Raised when a linear solve inside the fixed-point loop fails; carries the
/// history accumulated up to the failing iteration.
class PicardFailure : public std::runtime_error {
 public:
  PicardFailure(const std::string& what, PicardState partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const PicardState& partial() const { return partial_; }

 private:
  PicardState partial_;
};

/// Solves the linear-elastic problem (stiffening factor frozen at 1, i.e. the
/// beta = 0 operator) as the fixed-point starting guess.
Eigen::VectorXd warm_start(const QuadMesh& mesh, const MaterialModel& m,
                           const LoadCase& load, const SolverConfig& solver);

/// Fixed-point iteration: each step assembles the linear system with the
/// stiffening factor frozen at the previous iterate, solves it, and records
/// the nonlinear force-imbalance norm. Stops when the norm falls below tol,
/// when it changes by less than stagnation_rel (relatively) over
/// stagnation_window consecutive iterations, or at max_iter.
PicardState run_picard(const QuadMesh& mesh, const MaterialModel& m,
                       const LoadCase& load, const SolverConfig& solver,
                       const PicardConfig& picard);

/// CSV convergence log: iteration, residual_norm, clamp_events.
void write_convergence_csv(const PicardState& state, std::ostream& os);

}  // namespace slfem
