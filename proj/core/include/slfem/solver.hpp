// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "slfem/assembly.hpp"

namespace slfem {

enum class SolverMethod { Direct, ConjugateGradient };
enum class PreconditionerKind { None, Jacobi, IncompleteCholesky };

struct SolverConfig {
  SolverMethod method = SolverMethod::ConjugateGradient;
  double rel_tol = 1e-12;
  int max_iter = 0;  ///< 0 picks 10 * dofs
  PreconditionerKind preconditioner = PreconditionerKind::Jacobi;
};

/// Thrown on iteration breakdown or non-convergence; carries the last
/// relative residual reached.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double final_residual)
      : std::runtime_error(what), final_residual_(final_residual) {}
  double final_residual() const { return final_residual_; }

 private:
  double final_residual_;
};

struct SolveReport {
  int iterations = 0;
  double rel_residual = 0.0;
};

/// Solves the constrained SPD system. Guarantees ||A x - b|| <= rel_tol ||b||
/// and that constrained dofs carry their prescribed values exactly.
///
/// ConjugateGradient stops on the preconditioned residual norm relative to
/// ||b|| and then verifies the plain residual, iterating further if needed;
/// negative curvature raises SolveError naming the non-SPD breakdown. Direct
/// is a sparse Cholesky factorization.
Eigen::VectorXd solve(const SparseSystem& sys, const SolverConfig& cfg = {},
                      SolveReport* report = nullptr);

}  // namespace slfem
