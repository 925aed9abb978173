#pragma once

// Zeta-regularized determinants of the Laplacian of a flat SO(2) bundle over
// the unit-length circle, and the comparison with the cellular R-torsion.

#include <complex>

namespace rtorsion {

using Complex = std::complex<double>;

/// Flat SO(2) bundle over S^1 with holonomy angle psi, normalized into (0, 2 pi).
class CircleBundle {
 public:
  /// Throws NonAcyclicError when psi is within 1e-12 of a multiple of 2 pi.
  explicit CircleBundle(double psi);

  double psi() const noexcept { return psi_; }
  /// psi / 2 pi, in (0, 1).
  double a() const noexcept;

 private:
  double psi_;
};

/// sum_{k >= 0} (k + a)^{-s}, continued to s != 1 by Euler-Maclaurin summation.
/// Requires 0 < a <= 1. Accurate to about 1e-11 for Re s in [-1, 4].
Complex hurwitz_zeta(Complex s, double a);

/// d/ds of hurwitz_zeta.
Complex hurwitz_zeta_ds(Complex s, double a);

/// Spectral zeta function of the Laplacian (on functions or on 1-forms; the
/// spectra agree): sum_k 2 (2 pi k + psi)^{-2s} over k in Z.
Complex circle_zeta(Complex s, const CircleBundle& bundle);
Complex circle_zeta_ds(Complex s, const CircleBundle& bundle);

/// exp(-zeta'(0)) for the Laplacian in the given form degree (0 or 1).
double circle_det_laplacian(const CircleBundle& bundle, int degree = 1);

/// (det Laplacian on 1-forms)^{1/2}.
double circle_rs_torsion(const CircleBundle& bundle);

struct CheegerMullerReport {
  double cellular = 0.0;  ///< |tau_chain|^{-2} of the N-cell twisted circle
  double analytic = 0.0;  ///< circle_rs_torsion
  double rel_error = 0.0;
  int cells = 0;
};

CheegerMullerReport cheeger_muller_check(const CircleBundle& bundle, int cells);

}  // namespace rtorsion
