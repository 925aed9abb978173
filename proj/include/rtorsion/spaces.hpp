#pragma once

// Chain complexes of specific spaces (lens spaces, subdivided circles, small
// cell complexes for products) and the lens space classification predicates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/torsion_class.hpp"

namespace rtorsion {

/// L(p; q_1, ..., q_n), a quotient of S^{2n-1}. The three-manifold L(p, q) is
/// L(p; 1, q).
class LensSpace {
 public:
  /// Throws std::invalid_argument unless p >= 1, n >= 1 and gcd(q_k, p) = 1.
  LensSpace(std::int64_t p, std::vector<std::int64_t> q);

  std::int64_t p() const noexcept { return p_; }
  /// q_k reduced into [0, p).
  const std::vector<std::int64_t>& q() const noexcept { return q_; }
  /// Inverse residues: q_k r_k = 1 mod p.
  const std::vector<std::int64_t>& r() const noexcept { return r_; }
  std::size_t n() const noexcept { return q_.size(); }

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::vector<std::int64_t> q_;
  std::vector<std::int64_t> r_;
};

/// a mod p in [0, p).
std::int64_t mod(std::int64_t a, std::int64_t p);
/// Inverse of a modulo p; throws std::invalid_argument when gcd(a, p) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// Equivariant cellular chains of the universal cover over Z[Z_p]: one cell
/// per degree 0..2n-1, d_{2i-1} = sigma^{r_i} - 1 and d_{2i} = nu.
GroupRingComplex lens_chain_complex(const LensSpace& lens);

/// prod_i (eta^{r_i} - 1)^{-1} modulo +-eta^j. Throws NonAcyclicError for eta = 1
/// and std::invalid_argument when eta^p != 1.
TorsionClass lens_torsion(const LensSpace& lens, const Representation& eta);

/// |(1 - eta)(1 - eta^r)|^{-2} with q r = 1 mod p: the R-torsion of L(p, q)
/// for the rotation representation.
double three_dim_R_torsion(std::int64_t p, std::int64_t q, const Representation& eta);

struct HomotopyVerdict {
  bool equivalent = false;
  std::optional<std::int64_t> m;
};

/// m^n q'_1...q'_n = +-q_1...q_n mod p for some unit m (m = 1 when marked).
/// Throws std::invalid_argument when p or n differ.
HomotopyVerdict homotopy_equivalent(const LensSpace& a, const LensSpace& b, bool marked);

struct SimpleHomotopyWitness {
  std::int64_t m = 1;
  std::vector<std::size_t> permutation;  ///< q'_k = signs[k] * m * q_{permutation[k]}
  std::vector<int> signs;
};

struct SimpleHomotopyVerdict {
  bool equivalent = false;
  std::optional<SimpleHomotopyWitness> witness;
};

/// q'_k = +-m q_{pi(k)} mod p for a unit m (m = 1 when marked), a permutation
/// pi and independent signs. Exhaustive search.
SimpleHomotopyVerdict simple_homotopy_equivalent(const LensSpace& a, const LensSpace& b, bool marked);

/// L(p, q1) and L(p, q2) are homeomorphic iff q1 q2 = +-1 or q1 = +-q2 mod p.
bool homeomorphic_3d(std::int64_t p, std::int64_t q1, std::int64_t q2);

/// |tau_eta(L)|^2 for eta = exp(2 pi i k / p), k = 1..p-1, in that order.
std::vector<double> marked_torsion_profile(const LensSpace& lens);

/// The same values sorted ascending (a multiset; conjugate pairs repeat).
std::vector<double> torsion_profile(const LensSpace& lens);

/// Elementwise comparison of equally long lists, absolute tolerance.
bool profiles_equal(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-9);

/// A unit m with profile_b[k] = profile_a[m k mod p] for all k, if any: the
/// marked profiles agree after re-marking the fundamental group of a.
std::optional<std::int64_t> profile_marking(const LensSpace& a, const LensSpace& b, double tol = 1e-9);

/// h_* tau(f) = tau_{eta'}(b) / tau_eta(a) for the homotopy equivalence with
/// degree witness m, where eta' = eta^r and m r = 1 mod p. Throws
/// PreconditionError when m does not witness a homotopy equivalence.
TorsionClass whitehead_image(const LensSpace& a, const LensSpace& b, std::int64_t m, const Representation& eta);

/// Units of Z_p in ascending order: the index set S of franz_search vectors.
std::vector<std::int64_t> franz_residues(std::int64_t p);

/// All integer vectors (a_j)_{j in S} with |a_j| <= bound, a_j = a_{-j},
/// sum a_j = 0 and |prod_j (eta^j - 1)^{a_j} - 1| < 1e-8 for every p-th root of
/// unity eta != 1. Requires p >= 3, bound >= 0.
std::vector<std::vector<int>> franz_search(std::int64_t p, int bound);

/// N-cell circle twisted by rep: ranks [N, N], d = -I plus the cell holonomy
/// h on the cyclic subdiagonal, with h^N the total holonomy (h = exp(i psi/N)
/// for angles). Throws NonAcyclicError when the total holonomy is 1.
ComplexChainComplex circle_complex(int cells, const Representation& rep);

/// The circle over Z[Z] with N cells: d e_i = v_{i+1} - v_i, the last edge
/// closing up through the deck transformation sigma.
GroupRingComplex circle_group_ring_complex(int cells);

/// prod_i |exp(i psi_i) - 1| for a pair of pants with boundary holonomies psi_i.
/// Requires psi_1 + psi_2 + psi_3 = 0 mod 2 pi and every psi_i != 0 mod 2 pi.
double pants_torsion(double psi1, double psi2, double psi3);

/// The Mayer-Vietoris sequence 0 -> C(X n Y) -> C(X) + C(Y) -> C(Z) -> 0 of a
/// twisted two-cell circle Z split into arcs X = {v0, v1, e0}, Y = {v0, v1, e1}.
struct MayerVietoris {
  ComplexChainComplex intersection;
  ComplexChainComplex pieces;
  ComplexChainComplex whole;
  std::vector<ComplexMatrix> inclusion;   ///< v -> (v, v)
  std::vector<ComplexMatrix> projection;  ///< (x, y) -> x - y
};

MayerVietoris circle_mayer_vietoris(const Representation& rep);

/// Small integral cell complexes for product formulas.
IntegerComplex point_complex();
IntegerComplex interval_complex();
IntegerComplex sphere2_complex();
IntegerComplex ball3_complex();

}  // namespace rtorsion
