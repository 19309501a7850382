// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace slfem {

/// Plain 2D point / vector.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

/// Full (not necessarily symmetric) 2x2 matrix, e.g. a displacement gradient.
struct Mat2 {
  double a00 = 0.0, a01 = 0.0;
  double a10 = 0.0, a11 = 0.0;
};

/// Symmetric 2x2 tensor (strain or stress). The off-diagonal component is
/// stored once, so reconstructing the full matrix is symmetric by
/// construction.
struct SymTensor2 {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  static SymTensor2 identity() { return {1.0, 1.0, 0.0}; }

  SymTensor2 operator+(const SymTensor2& o) const {
    return {xx + o.xx, yy + o.yy, xy + o.xy};
  }
  SymTensor2 operator-(const SymTensor2& o) const {
    return {xx - o.xx, yy - o.yy, xy - o.xy};
  }
  SymTensor2 operator*(double s) const { return {xx * s, yy * s, xy * s}; }
  SymTensor2 operator-() const { return {-xx, -yy, -xy}; }
};

inline SymTensor2 operator*(double s, const SymTensor2& t) { return t * s; }

/// Voigt 3-vector view of a SymTensor2 in the tensorial shear convention:
/// v3 holds the 12-component itself, not the engineering shear 2*e12.
struct VoigtVec3 {
  double v1 = 0.0;  // 11
  double v2 = 0.0;  // 22
  double v3 = 0.0;  // 12 (tensorial)
};

inline VoigtVec3 to_voigt(const SymTensor2& t) { return {t.xx, t.yy, t.xy}; }
inline SymTensor2 from_voigt(const VoigtVec3& v) { return {v.v1, v.v2, v.v3}; }

inline double trace(const SymTensor2& t) { return t.xx + t.yy; }

/// Inner product A : B = tr(A^T B). The off-diagonal contributes twice.
inline double contract(const SymTensor2& a, const SymTensor2& b) {
  return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

/// Frobenius norm induced by contract().
inline double frob_norm(const SymTensor2& a) {
  return std::sqrt(contract(a, a));
}

/// Symmetric part of a displacement gradient: e_ij = (d_i u_j + d_j u_i) / 2.
inline SymTensor2 sym_grad(const Mat2& grad_u) {
  return {grad_u.a00, grad_u.a11, 0.5 * (grad_u.a01 + grad_u.a10)};
}

/// In-plane rotation of a symmetric tensor: R(angle) t R(angle)^T.
inline SymTensor2 rotate(const SymTensor2& t, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * c * t.xx - 2.0 * c * s * t.xy + s * s * t.yy,
          s * s * t.xx + 2.0 * c * s * t.xy + c * c * t.yy,
          c * s * (t.xx - t.yy) + (c * c - s * s) * t.xy};
}

}  // namespace slfem
