#include <gtest/gtest.h>

#include <random>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/spaces.hpp"
#include "rtorsion/torsion.hpp"
#include "rtorsion/torsion_class.hpp"

using namespace rtorsion;
using namespace std::complex_literals;

namespace {

Ambiguity mod_eta(std::int64_t p, std::int64_t k = 1) {
  return Ambiguity::mod_sign_and_powers(p, Representation::root_of_unity(p, k).value());
}

}  // namespace

TEST(TorsionClass, RejectsZeroAndNonFinite) {
  EXPECT_THROW(TorsionClass(0.0, Ambiguity::sign_only()), std::invalid_argument);
  EXPECT_THROW(TorsionClass(Complex(std::nan(""), 0.0), Ambiguity::sign_only()), std::invalid_argument);
}

TEST(TorsionClass, OrbitMemberIsEqual) {
  const Ambiguity a = mod_eta(7);
  const Complex eta = a.eta;
  const Complex v = 1.0 / (1.0 - eta);
  EXPECT_TRUE(class_equal({v, a}, {-std::pow(eta, 3) * v, a}));
}

TEST(TorsionClass, ScaledValueIsNotEqual) {
  const Ambiguity a = mod_eta(7);
  const Complex v = 1.0 / (1.0 - a.eta);
  EXPECT_FALSE(class_equal({v, a}, {2.0 * v, a}));
}

TEST(TorsionClass, SignOnlyIgnoresEtaPowers) {
  const Complex eta = Representation::root_of_unity(5, 1).value();
  EXPECT_TRUE(class_equal({-2.0 + 1.0i, Ambiguity::sign_only()}, {2.0 - 1.0i, Ambiguity::sign_only()}));
  EXPECT_FALSE(class_equal({eta, Ambiguity::sign_only()}, {1.0, Ambiguity::sign_only()}));
  EXPECT_FALSE(class_equal({-1.0, Ambiguity::none()}, {1.0, Ambiguity::none()}));
}

TEST(TorsionClass, AmbiguityMismatchThrows) {
  EXPECT_THROW(class_equal({1.0, Ambiguity::sign_only()}, {1.0, mod_eta(5)}), std::invalid_argument);
  EXPECT_THROW(class_equal({1.0, mod_eta(5)}, {1.0, mod_eta(7)}), std::invalid_argument);
}

TEST(TorsionClass, ModulusSquaredConstantOnOrbit) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> j(0, 10), s(0, 1);
  const Ambiguity a = mod_eta(11, 3);
  const TorsionClass t(0.3 - 1.7i, a);
  for (int i = 0; i < 50; ++i) {
    const Complex member = (s(rng) ? -1.0 : 1.0) * std::pow(a.eta, j(rng)) * t.value();
    EXPECT_NEAR(TorsionClass(member, a).modulus_squared(), t.modulus_squared(), 1e-12);
  }
}

TEST(TorsionClass, CanonicalHasMaximalRealPart) {
  const Ambiguity a = mod_eta(7);
  const TorsionClass t(1.0 / (a.eta - 1.0), a);
  const Complex c = t.canonical();
  EXPECT_TRUE(class_equal({c, a}, t));
  Complex m(1.0, 0.0);
  for (int j = 0; j < 7; ++j, m *= a.eta) {
    EXPECT_LE((m * t.value()).real(), c.real() + 1e-12);
    EXPECT_LE((-m * t.value()).real(), c.real() + 1e-12);
  }
}

TEST(TorsionClass, CanonicalIsOrbitInvariant) {
  const Ambiguity a = mod_eta(5, 2);
  const TorsionClass t(0.4 + 2.0i, a);
  const TorsionClass u(-std::pow(a.eta, 3) * t.value(), a);
  EXPECT_NEAR(std::abs(t.canonical() - u.canonical()), 0.0, 1e-12);
}

TEST(TorsionClass, ProductAndInverse) {
  const TorsionClass a(2.0i, Ambiguity::sign_only());
  const TorsionClass b(0.5, Ambiguity::sign_only());
  EXPECT_TRUE(class_equal(a * b, {1.0i, Ambiguity::sign_only()}));
  EXPECT_TRUE(class_equal(a / a, {1.0, Ambiguity::sign_only()}));
  EXPECT_TRUE(class_equal(a.inverse(), {-0.5i, Ambiguity::sign_only()}));
  EXPECT_THROW(a * TorsionClass(1.0, mod_eta(5)), std::invalid_argument);
}

TEST(TorsionClass, LensL711TwoWays) {
  const LensSpace lens(7, {1, 1});
  const Representation eta = Representation::root_of_unity(7, 1);
  const TorsionClass closed = lens_torsion(lens, eta);
  const TorsionClass chain = torsion_milnor(specialize(lens_chain_complex(lens), eta)).coarsen(closed.ambiguity());
  EXPECT_TRUE(class_equal(closed, chain));
}
