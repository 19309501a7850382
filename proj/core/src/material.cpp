// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/material.hpp"

#include <cmath>
#include <stdexcept>

namespace slfem {

namespace {

// Voigt realization of E for fiber contributions gx (on the 11 entry) and
// gy (on the 22 entry); only one of them is ever nonzero.
VoigtMatrix3 stiffness_voigt(double mu, double lambda, double gx, double gy) {
  return VoigtMatrix3(2.0 * mu + lambda + gx, lambda, 0.0,
                      2.0 * mu + lambda + gy, 0.0, 2.0 * mu);
}

}  // namespace

MaterialModel::MaterialModel(const MaterialParams& p) : p_(p) {
  if (!(p.mu > 0.0)) throw std::invalid_argument("MaterialModel: mu must be > 0");
  if (!(p.lambda >= 0.0))
    throw std::invalid_argument("MaterialModel: lambda must be >= 0");
  if (!(p.alpha > 0.0))
    throw std::invalid_argument("MaterialModel: alpha must be > 0");
  if (!(p.beta >= 0.0))
    throw std::invalid_argument("MaterialModel: beta must be >= 0");

  const double gx = p.fiber_axis == FiberAxis::X ? p.gamma : 0.0;
  const double gy = p.fiber_axis == FiberAxis::Y ? p.gamma : 0.0;
  const double d11 = 2.0 * p.mu + p.lambda + gx;
  const double d22 = 2.0 * p.mu + p.lambda + gy;
  const double det = d11 * d22 - p.lambda * p.lambda;

  // SPD of the Voigt block: both normal-block conditions plus the decoupled
  // shear entry 2*mu (positive since mu > 0).
  if (!(2.0 * p.mu + p.lambda + p.gamma > 0.0) || !(det > 0.0))
    throw std::invalid_argument(
        "MaterialModel: elasticity tensor is not positive definite");

  stiffness_ = stiffness_voigt(p.mu, p.lambda, gx, gy);
  // Closed-form inverse: the 2x2 normal block inverts directly and the shear
  // entry decouples.
  compliance_ = VoigtMatrix3(d22 / det, -p.lambda / det, 0.0, d11 / det, 0.0,
                             1.0 / (2.0 * p.mu));
}

SymTensor2 stiffness_apply(const MaterialModel& m, const SymTensor2& eps) {
  const double tr = trace(eps);
  SymTensor2 t = eps * (2.0 * m.mu());
  t.xx += m.lambda() * tr;
  t.yy += m.lambda() * tr;
  if (m.fiber_axis() == FiberAxis::X)
    t.xx += m.gamma() * eps.xx;
  else
    t.yy += m.gamma() * eps.yy;
  return t;
}

SymTensor2 compliance_apply(const MaterialModel& m, const SymTensor2& t) {
  return from_voigt(m.compliance_matrix().apply(to_voigt(t)));
}

double energy_seminorm(const MaterialModel& m, const SymTensor2& eps) {
  // e : E[e] >= 0 for SPD E; guard against roundoff producing a tiny
  // negative argument.
  return std::sqrt(std::max(0.0, contract(eps, stiffness_apply(m, eps))));
}

double psi(const MaterialModel& m, double s, ClampCount* clamps) {
  if (m.beta() == 0.0) return 1.0;
  double arg = std::pow(m.beta() * s, m.alpha());
  if (arg >= 1.0 - kPsiClampDelta) {
    arg = 1.0 - kPsiClampDelta;
    if (clamps) ++*clamps;
  }
  return std::pow(1.0 - arg, -1.0 / m.alpha());
}

SymTensor2 stress_from_strain(const MaterialModel& m, const SymTensor2& eps,
                              ClampCount* clamps) {
  return stiffness_apply(m, eps) * psi(m, energy_seminorm(m, eps), clamps);
}

SymTensor2 strain_from_stress(const MaterialModel& m, const SymTensor2& t) {
  const SymTensor2 kt = compliance_apply(m, t);
  if (m.beta() == 0.0) return kt;
  // w = ||K^(1/2)[t]|| = sqrt(t : K[t]); the denominator is always >= 1.
  const double w = std::sqrt(std::max(0.0, contract(t, kt)));
  const double denom =
      std::pow(1.0 + std::pow(m.beta() * w, m.alpha()), 1.0 / m.alpha());
  return kt * (1.0 / denom);
}

double energy_density(const MaterialModel& m, const SymTensor2& eps,
                      ClampCount* clamps) {
  return contract(stress_from_strain(m, eps, clamps), eps);
}

}  // namespace slfem
