// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/picard.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace slfem {

namespace {

bool stagnated(const std::vector<ResidualRecord>& history, int window,
               double rel) {
  if (static_cast<int>(history.size()) < window + 1) return false;
  const size_t last = history.size() - 1;
  for (int k = 0; k < window; ++k) {
    const double prev = history[last - k - 1].norm;
    const double cur = history[last - k].norm;
    if (prev == 0.0) return false;
    if (std::abs(cur - prev) / prev >= rel) return false;
  }
  return true;
}

}  // namespace

Eigen::VectorXd warm_start(const QuadMesh& mesh, const MaterialModel& m,
                           const LoadCase& load, const SolverConfig& solver) {
  const SparseSystem sys = assemble_system(mesh, m, load, nullptr);
  return solve(sys, solver);
}

PicardState run_picard(const QuadMesh& mesh, const MaterialModel& m,
                       const LoadCase& load, const SolverConfig& solver,
                       const PicardConfig& picard) {
  if (!(picard.tol > 0.0) || picard.max_iter < 1)
    throw std::invalid_argument("run_picard: invalid PicardConfig");

  PicardState state;
  try {
    state.u = warm_start(mesh, m, load, solver);
  } catch (const SolveError& err) {
    throw PicardFailure(std::string("picard warm start aborted: ") + err.what(),
                        std::move(state));
  }
  state.previous_u = state.u;
  state.status = PicardStatus::MaxIter;

  for (int n = 1; n <= picard.max_iter; ++n) {
    // state.u holds the previous iterate u^{n-1} entering step n
    AssemblyStats stats;
    const SparseSystem sys = assemble_system(mesh, m, load, &state.u, &stats);
    Eigen::VectorXd u_next;
    try {
      u_next = solve(sys, solver);
    } catch (const SolveError& err) {
      throw PicardFailure("picard iteration " + std::to_string(n) +
                              " aborted: " + err.what(),
                          std::move(state));
    }

    ClampCount clamps = stats.clamp_events;
    const auto [r, norm] = nonlinear_residual(mesh, m, load, u_next, &clamps);
    state.residual_history.push_back({n, norm, clamps});

    state.previous_u = std::move(state.u);
    state.u = std::move(u_next);

    if (norm <= picard.tol) {
      state.status = PicardStatus::ConvergedTol;
      break;
    }
    if (stagnated(state.residual_history, picard.stagnation_window,
                  picard.stagnation_rel)) {
      state.status = PicardStatus::Stagnated;
      break;
    }
  }
  return state;
}

void write_convergence_csv(const PicardState& state, std::ostream& os) {
  os << "iteration,residual_norm,clamp_events\n";
  char buf[64];
  for (const auto& rec : state.residual_history) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%llu\n", rec.iteration, rec.norm,
                  static_cast<unsigned long long>(rec.clamp_events));
    os << buf;
  }
}

}  // namespace slfem
