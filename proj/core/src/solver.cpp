// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>

namespace slfem {

namespace {

Eigen::VectorXd solve_direct(const SparseSystem& sys) {
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(sys.matrix);
  if (llt.info() != Eigen::Success)
    throw SolveError("direct solve: Cholesky factorization failed (matrix not SPD)",
                     std::numeric_limits<double>::quiet_NaN());
  return llt.solve(sys.rhs);
}

// Preconditioner application z = M^-1 r.
class Preconditioner {
 public:
  Preconditioner(const Eigen::SparseMatrix<double>& a, PreconditionerKind kind)
      : kind_(kind) {
    switch (kind_) {
      case PreconditionerKind::None:
        break;
      case PreconditionerKind::Jacobi:
        inv_diag_ = a.diagonal().cwiseInverse();
        break;
      case PreconditionerKind::IncompleteCholesky:
        ic_.compute(a);
        if (ic_.info() != Eigen::Success)
          throw SolveError("cg: incomplete Cholesky setup failed",
                           std::numeric_limits<double>::quiet_NaN());
        break;
    }
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& r) const {
    switch (kind_) {
      case PreconditionerKind::None:
        return r;
      case PreconditionerKind::Jacobi:
        return inv_diag_.cwiseProduct(r);
      case PreconditionerKind::IncompleteCholesky:
        return ic_.solve(r);
    }
    return r;
  }

 private:
  PreconditionerKind kind_;
  Eigen::VectorXd inv_diag_;
  Eigen::IncompleteCholesky<double> ic_;
};

Eigen::VectorXd solve_cg(const SparseSystem& sys, const SolverConfig& cfg,
                         SolveReport* report) {
  const auto& a = sys.matrix;
  const auto& b = sys.rhs;
  const int n = static_cast<int>(b.size());
  const int max_iter = cfg.max_iter > 0 ? cfg.max_iter : 10 * n;
  const double b_norm = b.norm();
  if (b_norm == 0.0) {
    if (report) *report = {0, 0.0};
    return Eigen::VectorXd::Zero(n);
  }

  const Preconditioner precond(a, cfg.preconditioner);

  // Seeding the constrained dofs with their prescribed values makes the
  // corresponding residual entries exactly zero, so CG never touches them.
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (const auto& d : sys.constraints) x[d.dof] = d.value;

  Eigen::VectorXd r = b - a * x;
  Eigen::VectorXd z = precond.apply(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  const double target = cfg.rel_tol * std::sqrt(precond.apply(b).dot(b));

  int it = 0;
  double plain_rel = r.norm() / b_norm;
  while (it < max_iter) {
    // Stopping metric: preconditioned residual norm relative to ||b||; the
    // plain residual contract is verified before returning.
    if (std::sqrt(std::max(0.0, rz)) <= target && plain_rel <= cfg.rel_tol) break;
    ++it;
    const Eigen::VectorXd ap = a * p;
    const double p_ap = p.dot(ap);
    if (!(p_ap > 0.0))
      throw SolveError("cg: negative curvature encountered (matrix not SPD)",
                       plain_rel);
    const double alpha = rz / p_ap;
    x += alpha * p;
    r -= alpha * ap;
    plain_rel = r.norm() / b_norm;
    z = precond.apply(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  if (plain_rel > cfg.rel_tol)
    throw SolveError("cg: no convergence within " + std::to_string(max_iter) +
                         " iterations (relative residual " +
                         std::to_string(plain_rel) + ")",
                     plain_rel);
  if (report) *report = {it, plain_rel};
  return x;
}

}  // namespace

Eigen::VectorXd solve(const SparseSystem& sys, const SolverConfig& cfg,
                      SolveReport* report) {
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0))
    throw std::invalid_argument("solve: rel_tol must lie in (0, 1)");
  Eigen::VectorXd x;
  if (cfg.method == SolverMethod::Direct) {
    x = solve_direct(sys);
    if (report) {
      const double bn = sys.rhs.norm();
      *report = {1, bn > 0.0 ? (sys.matrix * x - sys.rhs).norm() / bn : 0.0};
    }
  } else {
    x = solve_cg(sys, cfg, report);
  }
  for (const auto& d : sys.constraints) x[d.dof] = d.value;
  return x;
}

}  // namespace slfem
