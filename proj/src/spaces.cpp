#include "rtorsion/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace rtorsion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t product_mod(const std::vector<std::int64_t>& q, std::int64_t p) {
  std::int64_t out = mod(1, p);
  for (std::int64_t x : q) out = mod(out * x, p);
  return out;
}

std::int64_t power_mod(std::int64_t a, std::size_t e, std::int64_t p) {
  std::int64_t out = mod(1, p);
  for (std::size_t i = 0; i < e; ++i) out = mod(out * a, p);
  return out;
}

std::vector<std::int64_t> units(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= std::max<std::int64_t>(1, p - 1); ++m)
    if (std::gcd(m, p) == 1) out.push_back(m);
  return out;
}

void require_comparable(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("lens spaces have different p: " + a.to_string() + " vs " + b.to_string());
  if (a.n() != b.n())
    throw std::invalid_argument("lens spaces have different dimension: " + a.to_string() + " vs " + b.to_string());
}

bool plus_minus_equal(std::int64_t x, std::int64_t y, std::int64_t p) {
  return mod(x - y, p) == 0 || mod(x + y, p) == 0;
}

Complex lens_value(const LensSpace& lens, const Representation& eta) {
  Complex value(1.0, 0.0);
  for (std::int64_t r : lens.r()) value /= eta.power(r) - 1.0;
  return value;
}

}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  if (p == 1) return 0;
  for (std::int64_t r = 1; r < p; ++r)
    if (mod(mod(a, p) * r, p) == 1) return r;
  throw std::invalid_argument(std::to_string(a) + " is not invertible mod " + std::to_string(p));
}

LensSpace::LensSpace(std::int64_t p, std::vector<std::int64_t> q) : p_(p) {
  if (p < 1) throw std::invalid_argument("lens space order p must be >= 1");
  if (q.empty()) throw std::invalid_argument("lens space needs at least one q");
  for (std::int64_t x : q) {
    if (std::gcd(x, p) != 1)
      throw std::invalid_argument("q = " + std::to_string(x) + " is not coprime to p = " + std::to_string(p));
    q_.push_back(mod(x, p));
    r_.push_back(inverse_mod(x, p));
  }
}

std::string LensSpace::to_string() const {
  std::ostringstream os;
  os << "L(" << p_ << ';';
  for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i];
  os << ')';
  return os.str();
}

GroupRingComplex lens_chain_complex(const LensSpace& lens) {
  const std::int64_t p = lens.p();
  const std::size_t n = lens.n();
  std::vector<std::size_t> ranks(2 * n, 1);
  std::vector<ExactMatrix<GroupRingElement>> boundaries;
  for (std::size_t k = 1; k < 2 * n; ++k) {
    ExactMatrix<GroupRingElement> d(1, 1, GroupRingElement::zero(p));
    if (k % 2 == 1)
      d(0, 0) = GroupRingElement::sigma(p, lens.r()[(k - 1) / 2]) - GroupRingElement::one(p);
    else
      d(0, 0) = GroupRingElement::norm_element(p);
    boundaries.push_back(std::move(d));
  }
  GroupRingComplex out(std::move(ranks), std::move(boundaries), p);
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k < 2 * n; ++k) labels.push_back({"e" + std::to_string(k)});
  out.set_labels(std::move(labels));
  return out;
}

TorsionClass lens_torsion(const LensSpace& lens, const Representation& eta) {
  if (!eta.admissible_for(lens.p()))
    throw std::invalid_argument("representation " + eta.to_string() + " is not a " + std::to_string(lens.p()) +
                                "-th root of unity");
  if (eta.is_trivial(1e-12)) throw NonAcyclicError("lens space chains are not acyclic at eta = 1");
  return {lens_value(lens, eta), Ambiguity::mod_sign_and_powers(lens.p(), eta.value())};
}

double three_dim_R_torsion(std::int64_t p, std::int64_t q, const Representation& eta) {
  const LensSpace lens(p, {1, q});
  if (!eta.admissible_for(p))
    throw std::invalid_argument("representation " + eta.to_string() + " is not a " + std::to_string(p) +
                                "-th root of unity");
  if (eta.is_trivial(1e-12)) throw NonAcyclicError("R-torsion of a lens space is undefined at eta = 1");
  const double m = std::abs((1.0 - eta.value()) * (1.0 - eta.power(lens.r()[1])));
  return 1.0 / (m * m);
}

HomotopyVerdict homotopy_equivalent(const LensSpace& a, const LensSpace& b, bool marked) {
  require_comparable(a, b);
  const std::int64_t p = a.p();
  const std::int64_t qa = product_mod(a.q(), p);
  const std::int64_t qb = product_mod(b.q(), p);
  for (std::int64_t m : units(p)) {
    if (marked && m != 1) break;
    if (plus_minus_equal(mod(power_mod(m, a.n(), p) * qb, p), qa, p)) return {true, m};
  }
  return {};
}

SimpleHomotopyVerdict simple_homotopy_equivalent(const LensSpace& a, const LensSpace& b, bool marked) {
  require_comparable(a, b);
  const std::int64_t p = a.p();
  const std::size_t n = a.n();
  for (std::int64_t m : units(p)) {
    if (marked && m != 1) break;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> signs;
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t target = mod(m * a.q()[perm[k]], p);
        if (mod(b.q()[k] - target, p) == 0)
          signs.push_back(1);
        else if (mod(b.q()[k] + target, p) == 0)
          signs.push_back(-1);
        else
          break;
      }
      if (signs.size() == n) return {true, SimpleHomotopyWitness{m, perm, signs}};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {};
}

bool homeomorphic_3d(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (std::gcd(q1, p) != 1 || std::gcd(q2, p) != 1)
    throw std::invalid_argument("q must be coprime to p = " + std::to_string(p));
  return plus_minus_equal(mod(q1 * q2, p), 1, p) || plus_minus_equal(q1, q2, p);
}

std::vector<double> marked_torsion_profile(const LensSpace& lens) {
  std::vector<double> out;
  for (std::int64_t k = 1; k < lens.p(); ++k)
    out.push_back(std::norm(lens_value(lens, Representation::root_of_unity(lens.p(), k))));
  return out;
}

std::vector<double> torsion_profile(const LensSpace& lens) {
  std::vector<double> out = marked_torsion_profile(lens);
  std::sort(out.begin(), out.end());
  return out;
}

bool profiles_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::optional<std::int64_t> profile_marking(const LensSpace& a, const LensSpace& b, double tol) {
  require_comparable(a, b);
  const std::int64_t p = a.p();
  const std::vector<double> pa = marked_torsion_profile(a);
  const std::vector<double> pb = marked_torsion_profile(b);
  for (std::int64_t m : units(p)) {
    bool ok = true;
    for (std::int64_t k = 1; k < p && ok; ++k)
      ok = std::abs(pb[static_cast<std::size_t>(k - 1)] - pa[static_cast<std::size_t>(mod(m * k, p) - 1)]) <= tol;
    if (ok) return m;
  }
  return std::nullopt;
}

TorsionClass whitehead_image(const LensSpace& a, const LensSpace& b, std::int64_t m, const Representation& eta) {
  require_comparable(a, b);
  const std::int64_t p = a.p();
  if (std::gcd(m, p) != 1) throw PreconditionError("m = " + std::to_string(m) + " is not a unit mod " + std::to_string(p));
  if (!plus_minus_equal(mod(power_mod(mod(m, p), a.n(), p) * product_mod(b.q(), p), p), product_mod(a.q(), p), p))
    throw PreconditionError("m = " + std::to_string(m) + " does not give a homotopy equivalence " + a.to_string() +
                            " -> " + b.to_string());
  if (eta.kind() != Representation::Kind::RootOfUnity)
    throw std::invalid_argument("whitehead image needs eta given as a root of unity");
  const TorsionClass ta = lens_torsion(a, eta);
  const Representation eta_b = Representation::root_of_unity(eta.order(), eta.index() * inverse_mod(m, p));
  const Complex tb = lens_value(b, eta_b);
  return {tb / ta.value(), ta.ambiguity()};
}

std::vector<std::int64_t> franz_residues(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j < p; ++j)
    if (std::gcd(j, p) == 1) out.push_back(j);
  return out;
}

std::vector<std::vector<int>> franz_search(std::int64_t p, int bound) {
  if (p < 3) throw std::invalid_argument("franz search needs p >= 3");
  if (bound < 0) throw std::invalid_argument("franz search bound must be >= 0");
  const std::vector<std::int64_t> residues = franz_residues(p);
  // One free exponent per pair {j, -j}: the residues below p/2.
  std::vector<std::int64_t> reps;
  for (std::int64_t j : residues)
    if (2 * j < p) reps.push_back(j);

  // log|eta^j - 1| and arg(eta^j - 1) for each eta = exp(2 pi i k/p), k = 1..p-1.
  std::vector<std::vector<Complex>> factor(static_cast<std::size_t>(p - 1));
  for (std::int64_t k = 1; k < p; ++k)
    for (std::int64_t j : residues) {
      const Complex eta_j = std::polar(1.0, kTwoPi * static_cast<double>(mod(j * k, p)) / static_cast<double>(p));
      factor[static_cast<std::size_t>(k - 1)].push_back(eta_j - 1.0);
    }

  std::vector<std::vector<int>> solutions;
  std::vector<int> a(reps.size(), -bound);
  for (;;) {
    if (std::accumulate(a.begin(), a.end(), 0) == 0) {
      std::vector<int> full(residues.size(), 0);
      for (std::size_t i = 0; i < residues.size(); ++i) {
        const std::int64_t j = residues[i];
        const std::int64_t rep = std::min(j, p - j);
        full[i] = a[static_cast<std::size_t>(std::find(reps.begin(), reps.end(), rep) - reps.begin())];
      }
      bool ok = true;
      for (const auto& fk : factor) {
        Complex prod(1.0, 0.0);
        for (std::size_t i = 0; i < full.size(); ++i) prod *= std::pow(fk[i], full[i]);
        if (std::abs(prod - 1.0) >= 1e-8) {
          ok = false;
          break;
        }
      }
      if (ok) solutions.push_back(std::move(full));
    }
    std::size_t i = 0;
    while (i < a.size() && a[i] == bound) a[i++] = -bound;
    if (i == a.size()) break;
    ++a[i];
  }
  return solutions;
}

ComplexChainComplex circle_complex(int cells, const Representation& rep) {
  if (cells < 1) throw std::invalid_argument("circle needs at least one cell");
  if (rep.is_trivial(1e-12)) throw NonAcyclicError("circle with trivial holonomy has H_0 = H_1 = C");
  Complex h;
  if (rep.kind() == Representation::Kind::ComplexEval)
    h = std::pow(rep.value(), 1.0 / cells);
  else
    h = std::polar(1.0, rep.psi() / cells);
  const Eigen::Index n = cells;
  ComplexMatrix d = -ComplexMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d((i + 1) % n, i) += h;
  ComplexChainComplex out({static_cast<std::size_t>(cells), static_cast<std::size_t>(cells)}, {d});
  std::vector<std::string> v, e;
  for (int i = 0; i < cells; ++i) {
    v.push_back("v" + std::to_string(i));
    e.push_back("e" + std::to_string(i));
  }
  out.set_labels({v, e});
  return out;
}

GroupRingComplex circle_group_ring_complex(int cells) {
  if (cells < 1) throw std::invalid_argument("circle needs at least one cell");
  const auto n = static_cast<std::size_t>(cells);
  ExactMatrix<GroupRingElement> d(n, n, GroupRingElement::zero(0));
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) -= GroupRingElement::one(0);
    d((i + 1) % n, i) += (i + 1 == n) ? GroupRingElement::sigma(0) : GroupRingElement::one(0);
  }
  return GroupRingComplex({n, n}, {d}, 0);
}

double pants_torsion(double psi1, double psi2, double psi3) {
  const double total = std::remainder(psi1 + psi2 + psi3, kTwoPi);
  if (std::abs(total) > 1e-9) throw PreconditionError("boundary holonomies of a pair of pants must multiply to 1");
  double value = 1.0;
  for (double psi : {psi1, psi2, psi3}) {
    if (std::abs(std::remainder(psi, kTwoPi)) <= 1e-12)
      throw NonAcyclicError("pair of pants with a trivial boundary holonomy");
    value *= std::abs(std::polar(1.0, psi) - 1.0);
  }
  return value;
}

MayerVietoris circle_mayer_vietoris(const Representation& rep) {
  MayerVietoris mv{ComplexChainComplex({2, 0}, {ComplexMatrix(2, 0)}), ComplexChainComplex({1}, {}),
                   circle_complex(2, rep), {}, {}};
  const ComplexMatrix& dz = mv.whole.boundary(1);
  ComplexMatrix dxy = ComplexMatrix::Zero(4, 2);
  dxy.block(0, 0, 2, 1) = dz.col(0);
  dxy.block(2, 1, 2, 1) = dz.col(1);
  mv.pieces = ComplexChainComplex({4, 2}, {dxy});

  ComplexMatrix i0(4, 2);
  i0 << ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2);
  ComplexMatrix p0(2, 4);
  p0 << ComplexMatrix::Identity(2, 2), -ComplexMatrix::Identity(2, 2);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(0, 0) = 1.0;
  p1(1, 1) = -1.0;
  mv.inclusion = {i0, ComplexMatrix(2, 0)};
  mv.projection = {p0, p1};
  return mv;
}

IntegerComplex point_complex() { return IntegerComplex({1}, {}); }

IntegerComplex interval_complex() {
  ExactMatrix<Integer> d(2, 1);
  d(0, 0) = -1;
  d(1, 0) = 1;
  return IntegerComplex({2, 1}, {d});
}

IntegerComplex sphere2_complex() { return IntegerComplex({1, 0, 1}, {ExactMatrix<Integer>(1, 0), ExactMatrix<Integer>(0, 1)}); }

IntegerComplex ball3_complex() {
  ExactMatrix<Integer> d3(1, 1);
  d3(0, 0) = 1;
  return IntegerComplex({1, 0, 1, 1}, {ExactMatrix<Integer>(1, 0), ExactMatrix<Integer>(0, 1), d3});
}

}  // namespace rtorsion
