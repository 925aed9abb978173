#include "rtorsion/group_ring.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rtorsion/errors.hpp"

namespace rtorsion {

namespace {

void require_same_modulus(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatchError(a.modulus(), b.modulus());
}

double parse_double(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + text + "' in representation '" + spec + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad number '" + text + "' in representation '" + spec + "'");
  return v;
}

std::int64_t parse_int(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + text + "' in representation '" + spec + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "' in representation '" + spec + "'");
  return v;
}

}  // namespace

GroupRingElement::GroupRingElement(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 0) throw std::invalid_argument("group ring modulus must be >= 0");
}

GroupRingElement::GroupRingElement(std::int64_t modulus,
                                   std::vector<std::pair<Coefficient, Exponent>> terms)
    : GroupRingElement(modulus) {
  for (const auto& [c, e] : terms) add_term(c, e);
}

GroupRingElement GroupRingElement::monomial(std::int64_t modulus, Coefficient c, Exponent e) {
  GroupRingElement out(modulus);
  out.add_term(c, e);
  return out;
}

GroupRingElement GroupRingElement::norm_element(std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("norm element needs a finite cyclic group");
  GroupRingElement out(modulus);
  for (Exponent e = 0; e < modulus; ++e) out.add_term(1, e);
  return out;
}

GroupRingElement::Exponent GroupRingElement::reduce(Exponent e) const {
  if (modulus_ == 0) return e;
  Exponent r = e % modulus_;
  return r < 0 ? r + modulus_ : r;
}

void GroupRingElement::add_term(Coefficient c, Exponent e) {
  if (c == 0) return;
  const Exponent key = reduce(e);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement::Coefficient GroupRingElement::coefficient(Exponent e) const {
  auto it = terms_.find(reduce(e));
  return it == terms_.end() ? 0 : it->second;
}

GroupRingElement::Coefficient GroupRingElement::augmentation() const {
  Coefficient sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

GroupRingElement GroupRingElement::involution() const {
  GroupRingElement out(modulus_);
  for (const auto& [e, c] : terms_) out.add_term(c, -e);
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(modulus_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_modulus(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_modulus(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_modulus(a, b);
  GroupRingElement out(a.modulus());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coefficient mag = c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = -mag;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 's';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }
GroupRingElement involution(const GroupRingElement& a) { return a.involution(); }

// --- Representation ---------------------------------------------------------

Representation Representation::root_of_unity(std::int64_t p, std::int64_t k) {
  if (p < 1) throw std::invalid_argument("root of unity order must be >= 1");
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(((k % p) + p) % p) / static_cast<double>(p);
  Representation rep(Kind::RootOfUnity, std::polar(1.0, theta));
  rep.p_ = p;
  rep.k_ = ((k % p) + p) % p;
  rep.psi_ = theta;
  return rep;
}

Representation Representation::angle(double psi) {
  if (!std::isfinite(psi)) throw std::invalid_argument("angle must be finite");
  Representation rep(Kind::Angle, std::polar(1.0, psi));
  rep.psi_ = psi;
  return rep;
}

Representation Representation::complex_value(Complex t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
    throw std::invalid_argument("complex evaluation value must be finite");
  if (t == Complex(0.0, 0.0)) throw std::invalid_argument("evaluation value must be nonzero");
  Representation rep(Kind::ComplexEval, t);
  rep.psi_ = std::arg(t);
  return rep;
}

bool Representation::is_trivial(double tol) const {
  switch (kind_) {
    case Kind::RootOfUnity:
      return k_ == 0;
    case Kind::Angle: {
      const double r = std::remainder(psi_, 2.0 * std::numbers::pi);
      return std::abs(r) <= tol;
    }
    case Kind::ComplexEval:
      return std::abs(value_ - Complex(1.0, 0.0)) <= tol;
  }
  return false;
}

bool Representation::admissible_for(std::int64_t modulus, double tol) const {
  if (modulus == 0) return true;
  if (kind_ == Kind::RootOfUnity) return (k_ * modulus) % p_ == 0;
  return std::abs(power(modulus) - Complex(1.0, 0.0)) <= tol;
}

Complex Representation::power(std::int64_t e) const {
  switch (kind_) {
    case Kind::RootOfUnity: {
      const std::int64_t j = ((k_ * (e % p_)) % p_ + p_) % p_;
      return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_));
    }
    case Kind::Angle:
      return std::polar(1.0, psi_ * static_cast<double>(e));
    case Kind::ComplexEval:
      return std::pow(value_, static_cast<double>(e));
  }
  return {};
}

Representation Representation::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("representation spec needs a kind prefix: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "eta") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw std::invalid_argument("expected eta:P:K, got " + spec);
    return root_of_unity(parse_int(rest.substr(0, c2), spec), parse_int(rest.substr(c2 + 1), spec));
  }
  if (kind == "angle") return angle(parse_double(rest, spec));
  if (kind == "complex") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected complex:RE,IM, got " + spec);
    return complex_value({parse_double(rest.substr(0, comma), spec), parse_double(rest.substr(comma + 1), spec)});
  }
  throw std::invalid_argument("unknown representation kind '" + kind + "'");
}

std::string Representation::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::RootOfUnity:
      os << "eta:" << p_ << ':' << k_;
      break;
    case Kind::Angle:
      os << "angle:" << psi_;
      break;
    case Kind::ComplexEval:
      os << "complex:" << value_.real() << ',' << value_.imag();
      break;
  }
  return os.str();
}

Complex evaluate(const GroupRingElement& a, const Representation& rep) {
  if (!rep.admissible_for(a.modulus()))
    throw std::invalid_argument("representation " + rep.to_string() + " is not a " +
                                std::to_string(a.modulus()) + "-th root of unity; evaluation on Z[Z_" +
                                std::to_string(a.modulus()) + "] is not a ring homomorphism");
  Complex sum(0.0, 0.0);
  for (const auto& [e, c] : a.terms()) sum += static_cast<double>(c) * rep.power(e);
  return sum;
}

}  // namespace rtorsion
