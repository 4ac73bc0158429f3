#pragma once

// Free Dirac operator H = -i alpha.grad + m beta: matrix algebra, the
// fundamental solution phi_a of H - a, its 2x2 building blocks k_a / w_a,
// the parameter derivative dphi_da, and the weak/strong singularity split
// used by the singular quadrature.

#include "shellspec/common.hpp"

#include <array>
#include <cmath>

namespace shellspec {

/// Spectral parameter a inside the mass gap of a Dirac operator with mass m.
struct PhysicalParams {
  double m = 1.0;  ///< mass, > 0
  double a = 0.0;  ///< spectral parameter, |a| <= m

  PhysicalParams(double mass, double spectral) : m(mass), a(spectral) {
    if (!(m > 0)) throw ValidationError("PhysicalParams: mass must be positive");
    if (!(std::abs(a) <= m)) throw ValidationError("PhysicalParams: require |a| <= m");
  }

  /// sqrt(m^2 - a^2), the exponential decay rate of the kernels.
  double decay() const { return std::sqrt((m - a) * (m + a)); }
};

/// The constant 4x4 Dirac matrices alpha_j, beta and 2x2 Pauli matrices.
/// All entries are 0, +-1, +-i, so the Clifford relations hold exactly.
struct DiracAlgebra {
  std::array<Mat2c, 3> sigma;
  std::array<Mat4c, 3> alpha;
  Mat4c beta;
  Mat2c id2;
  Mat4c id4;

  DiracAlgebra() {
    const cplx i(0.0, 1.0);
    sigma[0] << 0, 1, 1, 0;
    sigma[1] << 0, -i, i, 0;
    sigma[2] << 1, 0, 0, -1;
    id2.setIdentity();
    id4.setIdentity();
    beta.setZero();
    beta.block<2, 2>(0, 0) = id2;
    beta.block<2, 2>(2, 2) = -id2;
    for (int j = 0; j < 3; ++j) {
      alpha[j].setZero();
      alpha[j].block<2, 2>(0, 2) = sigma[j];
      alpha[j].block<2, 2>(2, 0) = sigma[j];
    }
  }

  /// sigma . v
  Mat2c sigma_dot(const Vec3& v) const {
    return v[0] * sigma[0] + v[1] * sigma[1] + v[2] * sigma[2];
  }
  /// alpha . v
  Mat4c alpha_dot(const Vec3& v) const {
    return v[0] * alpha[0] + v[1] * alpha[1] + v[2] * alpha[2];
  }
};

inline const DiracAlgebra& dirac() {
  static const DiracAlgebra algebra;
  return algebra;
}

namespace detail {
inline void require_nonzero(const Vec3& x) {
  if (x.squaredNorm() == 0.0)
    throw ValidationError("kernel evaluated at the singular point x = 0");
}
}  // namespace detail

/// Fundamental solution of H - a:
///   phi_a(x) = e^{-rho |x|}/(4 pi |x|) (a + m beta + (1 + rho |x|) i alpha.x / |x|^2),
/// rho = sqrt(m^2 - a^2). Hermitian symmetry phi_a(x)^H = phi_a(-x).
inline Mat4c phi_a(const Vec3& x, const PhysicalParams& p) {
  detail::require_nonzero(x);
  const auto& D = dirac();
  const double r = x.norm();
  const double rho = p.decay();
  const double s = std::exp(-rho * r) / (4.0 * kPi * r);
  Mat4c out = s * (p.a * D.id4 + p.m * D.beta);
  out += (s * (1.0 + rho * r) / (r * r)) * cplx(0.0, 1.0) * D.alpha_dot(x);
  return out;
}

/// Scalar kernel of the single-layer block: e^{-rho |x|}/(4 pi |x|).
inline double k_a(const Vec3& x, const PhysicalParams& p) {
  detail::require_nonzero(x);
  const double r = x.norm();
  return std::exp(-p.decay() * r) / (4.0 * kPi * r);
}

/// 2x2 kernel of the off-diagonal blocks:
///   w_a(x) = e^{-rho |x|}(1 + rho |x|)/(4 pi |x|^3) i sigma.x.
inline Mat2c w_a(const Vec3& x, const PhysicalParams& p) {
  detail::require_nonzero(x);
  const double r = x.norm();
  const double rho = p.decay();
  const double s = std::exp(-rho * r) * (1.0 + rho * r) / (4.0 * kPi * r * r * r);
  return cplx(0.0, s) * dirac().sigma_dot(x);
}

/// Derivative of phi_a with respect to the spectral parameter:
///   a e^{-rho|x|}/(4 pi rho) (a + m beta + i rho alpha.x/|x|) + e^{-rho|x|}/(4 pi |x|).
/// Only defined for |a| < m; O(1/|x|) at the origin.
inline Mat4c dphi_da(const Vec3& x, const PhysicalParams& p) {
  detail::require_nonzero(x);
  const double rho = p.decay();
  if (rho == 0.0)
    throw ValidationError("dphi_da: formula requires |a| < m");
  const auto& D = dirac();
  const double r = x.norm();
  const double e = std::exp(-rho * r);
  const double c1 = p.a * e / (4.0 * kPi * rho);
  Mat4c out = c1 * (p.a * D.id4 + p.m * D.beta);
  out += (c1 * rho / r) * cplx(0.0, 1.0) * D.alpha_dot(x);
  out += (e / (4.0 * kPi * r)) * D.id4;
  return out;
}

/// Additive split phi_a = omega1 + omega2 + omega3 where
///   omega1 = e^{-rho|x|}/(4 pi |x|) (a + m beta + i rho alpha.x/|x|)   O(1/|x|),
///   omega2 = (e^{-rho|x|} - 1) i alpha.x / (4 pi |x|^3)               O(1/|x|),
///   omega3 = i alpha.x / (4 pi |x|^3)                                 the PV part,
/// and omega3 does not depend on a.
struct KernelSplit {
  Mat4c omega1, omega2, omega3;
};

inline KernelSplit kernel_split(const Vec3& x, const PhysicalParams& p) {
  detail::require_nonzero(x);
  const auto& D = dirac();
  const double r = x.norm();
  const double rho = p.decay();
  const double e = std::exp(-rho * r);
  const Mat4c ax = D.alpha_dot(x);
  KernelSplit out;
  out.omega1 = (e / (4.0 * kPi * r)) * (p.a * D.id4 + p.m * D.beta) +
               (e * rho / (4.0 * kPi * r * r)) * cplx(0.0, 1.0) * ax;
  out.omega2 = ((e - 1.0) / (4.0 * kPi * r * r * r)) * cplx(0.0, 1.0) * ax;
  out.omega3 = (1.0 / (4.0 * kPi * r * r * r)) * cplx(0.0, 1.0) * ax;
  return out;
}

}  // namespace shellspec
