// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "slfem/tensor.hpp"

namespace slfem {

/// Orientation of the reinforcement axis encoded by the structural tensor
/// M = e1 (x) e1 or e2 (x) e2.
enum class FiberAxis { X, Y };

struct MaterialParams {
  double mu = 1.0;      ///< shear modulus, > 0
  double lambda = 1.0;  ///< Lame modulus, > 0
  double gamma = 0.5;   ///< extra stiffness along the fiber axis
  FiberAxis fiber_axis = FiberAxis::X;
  double alpha = 1.0;  ///< nonlinearity exponent, > 0
  double beta = 1.0;   ///< strain-limit parameter, >= 0 (0 = linear elastic)
};

/// Symmetric 3x3 matrix acting on Voigt 3-vectors (tensorial shear
/// convention). Used for the stiffness and compliance blocks.
class VoigtMatrix3 {
 public:
  VoigtMatrix3() : m_{} {}
  VoigtMatrix3(double m11, double m12, double m13, double m22, double m23,
               double m33)
      : m_{m11, m12, m13, m22, m23, m33} {}

  double operator()(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return m_[idx[i][j]];
  }

  VoigtVec3 apply(const VoigtVec3& v) const {
    return {(*this)(0, 0) * v.v1 + (*this)(0, 1) * v.v2 + (*this)(0, 2) * v.v3,
            (*this)(1, 0) * v.v1 + (*this)(1, 1) * v.v2 + (*this)(1, 2) * v.v3,
            (*this)(2, 0) * v.v1 + (*this)(2, 1) * v.v2 + (*this)(2, 2) * v.v3};
  }

 private:
  std::array<double, 6> m_;  // upper triangle, row major
};

/// Running count of nonlinearity-clamp events (see psi()).
using ClampCount = std::uint64_t;

/// Argument clamp for the stiffening function: (beta*s)^alpha is kept at or
/// below 1 - kPsiClampDelta so intermediate iterates outside the admissible
/// strain range produce large but finite stiffening.
inline constexpr double kPsiClampDelta = 1e-8;

/// Transversely isotropic material with a strain-limiting response.
///
/// The linear map is E[e] = 2*mu*e + lambda*tr(e)*I + gamma*(e:M)*M and the
/// compliance K is its inverse, computed in closed form at construction (the
/// shear entry decouples from the 2x2 normal block). Construction throws
/// std::invalid_argument unless mu > 0, lambda > 0, alpha > 0, beta >= 0 and
/// the Voigt block of E is symmetric positive definite.
class MaterialModel {
 public:
  explicit MaterialModel(const MaterialParams& p);

  double mu() const { return p_.mu; }
  double lambda() const { return p_.lambda; }
  double gamma() const { return p_.gamma; }
  FiberAxis fiber_axis() const { return p_.fiber_axis; }
  double alpha() const { return p_.alpha; }
  double beta() const { return p_.beta; }
  const MaterialParams& params() const { return p_; }

  const VoigtMatrix3& stiffness_matrix() const { return stiffness_; }
  const VoigtMatrix3& compliance_matrix() const { return compliance_; }

 private:
  MaterialParams p_;
  VoigtMatrix3 stiffness_;
  VoigtMatrix3 compliance_;
};

/// E[e] = 2*mu*e + lambda*tr(e)*I + gamma*(e:M)*M.
SymTensor2 stiffness_apply(const MaterialModel& m, const SymTensor2& eps);

/// K[t] with K = E^-1; round-trips stiffness_apply to machine precision.
SymTensor2 compliance_apply(const MaterialModel& m, const SymTensor2& t);

/// s = sqrt(e : E[e]), which equals the Frobenius norm of E^(1/2)[e].
double energy_seminorm(const MaterialModel& m, const SymTensor2& eps);

/// Stiffening factor Psi(s) = (1 - (beta*s)^alpha)^(-1/alpha), >= 1.
/// Requires s >= 0. For beta = 0 returns exactly 1. When beta*s approaches
/// or exceeds 1 the argument is clamped (see kPsiClampDelta) and *clamps, if
/// given, is incremented.
double psi(const MaterialModel& m, double s, ClampCount* clamps = nullptr);

/// T(e) = Psi(||E^(1/2)[e]||) * E[e].
SymTensor2 stress_from_strain(const MaterialModel& m, const SymTensor2& eps,
                              ClampCount* clamps = nullptr);

/// F(t) = K[t] / (1 + beta^alpha * ||K^(1/2)[t]||^alpha)^(1/alpha).
/// The Frobenius norm of the result stays below 1/beta for beta > 0; F is the
/// algebraic inverse of stress_from_strain on the admissible strain set.
SymTensor2 strain_from_stress(const MaterialModel& m, const SymTensor2& t);

/// Strain energy density T(e) : e, non-negative.
double energy_density(const MaterialModel& m, const SymTensor2& eps,
                      ClampCount* clamps = nullptr);

}  // namespace slfem
