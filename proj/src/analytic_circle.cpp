#include "rtorsion/analytic_circle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rtorsion/errors.hpp"
#include "rtorsion/spaces.hpp"
#include "rtorsion/torsion.hpp"

namespace rtorsion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2j} / (2j)! for j = 1..6.
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

struct ZetaValue {
  Complex value;
  Complex derivative;
};

// Euler-Maclaurin with K head terms; `orders` Bernoulli corrections.
// Returns estimates with orders-1 and orders corrections.
std::array<ZetaValue, 2> euler_maclaurin(Complex s, double a, int head, std::size_t orders) {
  ZetaValue sum{};
  for (int k = 0; k < head; ++k) {
    const double x = k + a;
    const Complex t = std::pow(x, -s);
    sum.value += t;
    sum.derivative -= std::log(x) * t;
  }
  const double x = head + a;
  const double lx = std::log(x);
  const Complex x1 = std::pow(x, 1.0 - s);
  const Complex x0 = std::pow(x, -s);
  sum.value += x1 / (s - 1.0) + 0.5 * x0;
  sum.derivative += -lx * x1 / (s - 1.0) - x1 / ((s - 1.0) * (s - 1.0)) - 0.5 * lx * x0;

  // Rising product P_j(s) = s (s+1) ... (s+2j-2) and its derivative.
  Complex p(1.0, 0.0), dp(0.0, 0.0);
  std::array<ZetaValue, 2> out{};
  for (std::size_t j = 1; j <= orders; ++j) {
    const std::size_t lo = (j == 1) ? 0 : 2 * j - 3;
    for (std::size_t i = lo; i <= 2 * j - 2; ++i) {
      const Complex f = s + static_cast<double>(i);
      dp = dp * f + p;
      p *= f;
    }
    const Complex power = std::pow(x, -s - static_cast<double>(2 * j - 1));
    const double c = kBernoulliOverFactorial[j - 1];
    sum.value += c * p * power;
    sum.derivative += c * (dp - lx * p) * power;
    if (j + 1 == orders) out[0] = sum;
  }
  out[1] = sum;
  return out;
}

ZetaValue hurwitz(Complex s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("hurwitz zeta needs 0 < a <= 1");
  if (std::abs(s - 1.0) < 1e-12) throw PreconditionError("hurwitz zeta has a pole at s = 1");
  int head = 32;
  for (;;) {
    const auto est = euler_maclaurin(s, a, head, kBernoulliOverFactorial.size());
    const double scale = std::max(1.0, std::abs(est[1].value));
    const bool converged = std::abs(est[1].value - est[0].value) <= 1e-12 * scale &&
                           std::abs(est[1].derivative - est[0].derivative) <= 1e-12 * std::max(1.0, std::abs(est[1].derivative));
    if (converged || head >= (1 << 20)) return est[1];
    head *= 2;
  }
}

}  // namespace

CircleBundle::CircleBundle(double psi) {
  if (!std::isfinite(psi)) throw std::invalid_argument("holonomy angle must be finite");
  double r = std::fmod(psi, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r <= 1e-12 || r >= kTwoPi - 1e-12)
    throw NonAcyclicError("circle bundle with holonomy angle " + std::to_string(psi) + " = 0 mod 2 pi");
  psi_ = r;
}

double CircleBundle::a() const noexcept { return psi_ / kTwoPi; }

Complex hurwitz_zeta(Complex s, double a) { return hurwitz(s, a).value; }

Complex hurwitz_zeta_ds(Complex s, double a) { return hurwitz(s, a).derivative; }

Complex circle_zeta(Complex s, const CircleBundle& bundle) {
  const double a = bundle.a();
  return 2.0 * std::pow(kTwoPi, -2.0 * s) * (hurwitz_zeta(2.0 * s, a) + hurwitz_zeta(2.0 * s, 1.0 - a));
}

Complex circle_zeta_ds(Complex s, const CircleBundle& bundle) {
  const double a = bundle.a();
  const ZetaValue u = hurwitz(2.0 * s, a);
  const ZetaValue v = hurwitz(2.0 * s, 1.0 - a);
  const Complex z = u.value + v.value;
  const Complex dz = 2.0 * (u.derivative + v.derivative);
  return 2.0 * std::pow(kTwoPi, -2.0 * s) * (-2.0 * std::log(kTwoPi) * z + dz);
}

double circle_det_laplacian(const CircleBundle& bundle, int degree) {
  if (degree != 0 && degree != 1) throw std::invalid_argument("the circle has forms in degrees 0 and 1 only");
  return std::exp(-circle_zeta_ds(0.0, bundle).real());
}

double circle_rs_torsion(const CircleBundle& bundle) { return std::sqrt(circle_det_laplacian(bundle, 1)); }

CheegerMullerReport cheeger_muller_check(const CircleBundle& bundle, int cells) {
  const ComplexChainComplex c = circle_complex(cells, Representation::angle(bundle.psi()));
  CheegerMullerReport out;
  out.cells = cells;
  out.cellular = 1.0 / torsion_milnor(c).modulus_squared();
  out.analytic = circle_rs_torsion(bundle);
  out.rel_error = std::abs(out.cellular - out.analytic) / out.analytic;
  return out;
}

}  // namespace rtorsion
