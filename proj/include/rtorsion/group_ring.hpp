#pragma once

// Exact arithmetic in the integral group rings Z[Z_p] and Z[Z] (Laurent
// polynomials), and evaluation homomorphisms into the nonzero complex numbers.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rtorsion {

using Complex = std::complex<double>;

/// Element sum_g n_g g of Z[Z_p] (modulus p >= 1) or of Z[Z] (modulus 0).
/// The generator is written sigma; terms are keyed by exponent. Exponents are
/// reduced into [0, p) for the finite cyclic case and zero coefficients are
/// never stored.
class GroupRingElement {
 public:
  using Exponent = std::int64_t;
  using Coefficient = std::int64_t;

  /// The zero element of Z[Z_p] (or Z[Z] for modulus 0).
  explicit GroupRingElement(std::int64_t modulus = 0);
  GroupRingElement(std::int64_t modulus, std::vector<std::pair<Coefficient, Exponent>> terms);

  static GroupRingElement zero(std::int64_t modulus) { return GroupRingElement(modulus); }
  static GroupRingElement one(std::int64_t modulus) { return monomial(modulus, 1, 0); }
  static GroupRingElement monomial(std::int64_t modulus, Coefficient c, Exponent e);
  static GroupRingElement integer(std::int64_t modulus, Coefficient c) { return monomial(modulus, c, 0); }
  /// sigma^e
  static GroupRingElement sigma(std::int64_t modulus, Exponent e = 1) { return monomial(modulus, 1, e); }
  /// nu = 1 + sigma + ... + sigma^{p-1}; requires modulus >= 1.
  static GroupRingElement norm_element(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::map<Exponent, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(Exponent e) const;

  /// Sum of coefficients: the image under sigma -> 1.
  Coefficient augmentation() const;

  /// Conjugation anti-involution sum n_g g -> sum n_g g^{-1}.
  GroupRingElement involution() const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) = default;

  /// Human readable form, e.g. "2 + 3*s^4".
  std::string to_string() const;

 private:
  Exponent reduce(Exponent e) const;
  void add_term(Coefficient c, Exponent e);

  std::int64_t modulus_ = 0;
  std::map<Exponent, Coefficient> terms_;
};

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement involution(const GroupRingElement& a);

/// Where the generator sigma of pi_1 is sent in C*.
class Representation {
 public:
  enum class Kind { RootOfUnity, Angle, ComplexEval };

  /// sigma -> exp(2 pi i k / p)
  static Representation root_of_unity(std::int64_t p, std::int64_t k);
  /// sigma -> exp(i psi)
  static Representation angle(double psi);
  /// sigma -> t
  static Representation complex_value(Complex t);

  Kind kind() const noexcept { return kind_; }
  Complex value() const noexcept { return value_; }
  std::int64_t order() const noexcept { return p_; }
  std::int64_t index() const noexcept { return k_; }
  double psi() const noexcept { return psi_; }

  /// True when sigma is sent to 1 (within `tol`); such representations never
  /// give acyclic twisted lens or circle complexes.
  bool is_trivial(double tol = 1e-12) const;

  /// Whether evaluating Z[Z_modulus] at this value is a ring homomorphism,
  /// i.e. value^modulus = 1. Every nonzero value is admissible for Z[Z].
  bool admissible_for(std::int64_t modulus, double tol = 1e-9) const;

  /// Value of sigma^e, computed exactly from (p, k) or psi where possible.
  Complex power(std::int64_t e) const;

  /// Parse "eta:P:K", "angle:PSI" or "complex:RE,IM".
  static Representation parse(const std::string& spec);
  std::string to_string() const;

 private:
  Representation(Kind kind, Complex value) : kind_(kind), value_(value) {}

  Kind kind_;
  Complex value_;
  std::int64_t p_ = 0;
  std::int64_t k_ = 0;
  double psi_ = 0.0;
};

/// Ring homomorphism Z[Z_p] -> C (or Z[Z] -> C) sending sigma to rep.value().
/// Throws std::invalid_argument when the value is not a p-th root of unity.
Complex evaluate(const GroupRingElement& a, const Representation& rep);

}  // namespace rtorsion
