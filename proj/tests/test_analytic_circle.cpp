#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rtorsion/analytic_circle.hpp"
#include "rtorsion/errors.hpp"

using namespace rtorsion;

namespace {

constexpr double kPi = std::numbers::pi;

double two_sin_half(double psi) { return 2.0 * std::sin(psi / 2.0); }

}  // namespace

TEST(CircleBundle, NormalizesAngle) {
  EXPECT_NEAR(CircleBundle(-1.0).psi(), 2 * kPi - 1.0, 1e-15);
  EXPECT_NEAR(CircleBundle(1.0 + 4 * kPi).psi(), 1.0, 1e-14);
  EXPECT_NEAR(CircleBundle(kPi).a(), 0.5, 1e-15);
}

TEST(CircleBundle, TrivialHolonomyIsNotAcyclic) {
  EXPECT_THROW(CircleBundle(0.0), NonAcyclicError);
  EXPECT_THROW(CircleBundle(2 * kPi), NonAcyclicError);
  EXPECT_THROW(CircleBundle(-4 * kPi + 1e-14), NonAcyclicError);
}

TEST(HurwitzZeta, ValueAtZero) {
  for (double a : {0.05, 0.25, 0.5, 0.9, 1.0}) EXPECT_NEAR(hurwitz_zeta(0.0, a).real(), 0.5 - a, 1e-11) << a;
}

TEST(HurwitzZeta, DerivativeAtZeroIsLogGamma) {
  for (double a : {0.05, 0.25, 0.5, 0.9, 1.0})
    EXPECT_NEAR(hurwitz_zeta_ds(0.0, a).real(), std::lgamma(a) - 0.5 * std::log(2 * kPi), 1e-10) << a;
}

TEST(HurwitzZeta, RiemannValues) {
  EXPECT_NEAR(hurwitz_zeta(2.0, 1.0).real(), kPi * kPi / 6.0, 1e-12);
  EXPECT_NEAR(hurwitz_zeta(-1.0, 1.0).real(), -1.0 / 12.0, 1e-11);
  EXPECT_NEAR(hurwitz_zeta(2.0, 0.5).real(), kPi * kPi / 2.0, 1e-11);
}

TEST(HurwitzZeta, DuplicationFormula) {
  for (const Complex s : {Complex(0.3, 0.0), Complex(-0.5, 1.0), Complex(2.5, -2.0), Complex(0.0, 3.0)})
    for (double a : {0.2, 0.6, 1.0}) {
      const Complex lhs = hurwitz_zeta(s, a / 2.0) + hurwitz_zeta(s, (a + 1.0) / 2.0);
      const Complex rhs = std::pow(2.0, s) * hurwitz_zeta(s, a);
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs))) << s << " " << a;
    }
}

TEST(HurwitzZeta, DerivativeMatchesDifferenceQuotient) {
  const double h = 1e-5;
  for (const Complex s : {Complex(-0.7, 0.0), Complex(0.4, 0.8), Complex(3.0, 0.0)}) {
    const Complex numeric = (hurwitz_zeta(s + h, 0.3) - hurwitz_zeta(s - h, 0.3)) / (2 * h);
    EXPECT_LE(std::abs(hurwitz_zeta_ds(s, 0.3) - numeric), 1e-7) << s;
  }
}

TEST(HurwitzZeta, RejectsBadParameters) {
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), std::invalid_argument);
  EXPECT_THROW(hurwitz_zeta(2.0, 1.5), std::invalid_argument);
  EXPECT_THROW(hurwitz_zeta(1.0, 0.5), PreconditionError);
}

TEST(CircleZeta, VanishesAtZero) {
  for (double psi : {0.5, 1.0, 2.0, kPi}) EXPECT_NEAR(std::abs(circle_zeta(0.0, CircleBundle(psi))), 0.0, 1e-11);
}

TEST(CircleZeta, MatchesDirectSumWhereConvergent) {
  const CircleBundle bundle(1.3);
  Complex direct = 0.0;
  for (int k = -200000; k <= 200000; ++k) direct += 2.0 / std::pow(2 * kPi * k + bundle.psi(), 4.0);
  EXPECT_NEAR(std::abs(circle_zeta(2.0, bundle) - direct), 0.0, 1e-12 * std::abs(direct));
}

TEST(CircleDeterminant, ClosedForm) {
  for (double psi : {0.5, 1.0, 2.0, kPi, 5.5}) {
    const CircleBundle bundle(psi);
    const double expected = std::pow(two_sin_half(psi), 4);
    EXPECT_NEAR(circle_det_laplacian(bundle, 1) / expected, 1.0, 1e-10) << psi;
    EXPECT_NEAR(circle_det_laplacian(bundle, 0) / expected, 1.0, 1e-10) << psi;
    EXPECT_NEAR(circle_rs_torsion(bundle) / (expected / std::pow(two_sin_half(psi), 2)), 1.0, 1e-10);
  }
  EXPECT_THROW(circle_det_laplacian(CircleBundle(1.0), 2), std::invalid_argument);
}

TEST(CircleDeterminant, LerchOracle) {
  // zeta'(0) = 4 (lgamma(a) + lgamma(1 - a) - log(2 pi)).
  for (double psi : {0.3, 1.7, 4.0}) {
    const CircleBundle bundle(psi);
    const double a = bundle.a();
    const double oracle = 4.0 * (std::lgamma(a) + std::lgamma(1.0 - a) - std::log(2 * kPi));
    EXPECT_NEAR(circle_zeta_ds(0.0, bundle).real(), oracle, 1e-10) << psi;
  }
}

TEST(CheegerMuller, CircleAgreement) {
  for (double psi : {0.5, 1.0, 2.0, kPi})
    for (int cells : {1, 2, 8, 64}) {
      const CheegerMullerReport r = cheeger_muller_check(CircleBundle(psi), cells);
      EXPECT_EQ(r.cells, cells);
      EXPECT_LT(std::abs(r.cellular / std::pow(two_sin_half(psi), 2) - 1.0), 1e-9);
      EXPECT_LT(r.rel_error, 1e-9) << psi << " " << cells;
    }
}
