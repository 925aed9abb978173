#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace rtorsion {

using Complex = std::complex<double>;

/// Indeterminacy of a torsion value: nothing, a sign, or sign times a power of
/// the evaluation root of unity eta (the image of pi_1 under the representation).
struct Ambiguity {
  enum class Kind { None, SignOnly, ModSignAndPowers };

  Kind kind = Kind::SignOnly;
  std::int64_t p = 1;
  Complex eta{1.0, 0.0};

  static Ambiguity none() { return {Kind::None, 1, {1.0, 0.0}}; }
  static Ambiguity sign_only() { return {Kind::SignOnly, 1, {1.0, 0.0}}; }
  static Ambiguity mod_sign_and_powers(std::int64_t p, Complex eta);

  /// Same descriptor (eta compared within tol).
  bool matches(const Ambiguity& other, double tol = 1e-9) const;
  std::string name() const;
};

/// Nonzero complex torsion value taken modulo its ambiguity group.
class TorsionClass {
 public:
  TorsionClass(Complex value, Ambiguity ambiguity);

  Complex value() const noexcept { return value_; }
  const Ambiguity& ambiguity() const noexcept { return ambiguity_; }
  double modulus_squared() const noexcept { return std::norm(value_); }

  /// Orbit member with the largest real part, ties broken by the largest
  /// imaginary part. Used for printing; the class is the invariant.
  Complex canonical() const;

  /// Same value seen in a coarser quotient (e.g. sign_only -> mod +-eta^j).
  TorsionClass coarsen(const Ambiguity& coarser) const { return {value_, coarser}; }

  TorsionClass inverse() const { return {1.0 / value_, ambiguity_}; }
  friend TorsionClass operator*(const TorsionClass& a, const TorsionClass& b);
  friend TorsionClass operator/(const TorsionClass& a, const TorsionClass& b);

 private:
  Complex value_;
  Ambiguity ambiguity_;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// a ~ b iff a = s * eta^j * b for some sign s and j in [0, p), relative to |b|.
/// Throws std::invalid_argument when the ambiguity descriptors differ.
bool class_equal(const TorsionClass& a, const TorsionClass& b, double tol = kDefaultTolerance);

}  // namespace rtorsion
