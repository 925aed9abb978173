#include "rtorsion/torsion_class.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rtorsion/errors.hpp"

namespace rtorsion {

namespace {

// All multipliers s * eta^j of the ambiguity group.
std::vector<Complex> orbit_multipliers(const Ambiguity& a) {
  switch (a.kind) {
    case Ambiguity::Kind::None:
      return {Complex(1.0, 0.0)};
    case Ambiguity::Kind::SignOnly:
      return {Complex(1.0, 0.0), Complex(-1.0, 0.0)};
    case Ambiguity::Kind::ModSignAndPowers: {
      std::vector<Complex> out;
      Complex power(1.0, 0.0);
      for (std::int64_t j = 0; j < a.p; ++j) {
        out.push_back(power);
        out.push_back(-power);
        power *= a.eta;
      }
      return out;
    }
  }
  return {};
}

}  // namespace

Ambiguity Ambiguity::mod_sign_and_powers(std::int64_t p, Complex eta) {
  if (p < 1) throw std::invalid_argument("ambiguity order must be >= 1");
  if (std::abs(std::abs(eta) - 1.0) > 1e-9) throw std::invalid_argument("ambiguity root must have modulus 1");
  return {Kind::ModSignAndPowers, p, eta};
}

bool Ambiguity::matches(const Ambiguity& other, double tol) const {
  if (kind != other.kind) return false;
  if (kind != Kind::ModSignAndPowers) return true;
  return p == other.p && std::abs(eta - other.eta) <= tol;
}

std::string Ambiguity::name() const {
  switch (kind) {
    case Kind::None:
      return "none";
    case Kind::SignOnly:
      return "sign_only";
    case Kind::ModSignAndPowers:
      return "mod_sign_and_powers";
  }
  return "";
}

TorsionClass::TorsionClass(Complex value, Ambiguity ambiguity) : value_(value), ambiguity_(ambiguity) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || value == Complex(0.0, 0.0))
    throw std::invalid_argument("torsion value must be finite and nonzero");
}

Complex TorsionClass::canonical() const {
  const double tie = 1e-12 * std::abs(value_);
  Complex best = value_;
  bool first = true;
  for (const Complex& m : orbit_multipliers(ambiguity_)) {
    const Complex v = m * value_;
    if (first || v.real() > best.real() + tie ||
        (std::abs(v.real() - best.real()) <= tie && v.imag() > best.imag())) {
      best = v;
      first = false;
    }
  }
  return best;
}

TorsionClass operator*(const TorsionClass& a, const TorsionClass& b) {
  if (!a.ambiguity_.matches(b.ambiguity_)) throw std::invalid_argument("ambiguity mismatch in torsion product");
  return {a.value_ * b.value_, a.ambiguity_};
}

TorsionClass operator/(const TorsionClass& a, const TorsionClass& b) {
  if (!a.ambiguity_.matches(b.ambiguity_)) throw std::invalid_argument("ambiguity mismatch in torsion quotient");
  return {a.value_ / b.value_, a.ambiguity_};
}

bool class_equal(const TorsionClass& a, const TorsionClass& b, double tol) {
  if (!a.ambiguity().matches(b.ambiguity())) throw std::invalid_argument("ambiguity mismatch in class comparison");
  const double scale = std::abs(b.value());
  for (const Complex& m : orbit_multipliers(a.ambiguity()))
    if (std::abs(a.value() - m * b.value()) <= tol * scale) return true;
  return false;
}

}  // namespace rtorsion
