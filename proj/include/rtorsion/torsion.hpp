#pragma once

// Torsion of based chain complexes over C, by three independent routes
// (transition determinants, chain contraction, alternating determinants of
// the boundary between orthogonal complements) plus the Laplacian formula and
// the correction term of a long exact homology sequence.
//
// Convention: tau(C) = prod_i [c_i / (b_i h_i b_{i-1})]^{(-1)^i}, where [c/x]
// is the determinant expressing c in terms of x. A two-term complex with
// invertible d has tau = 1/det d; the twisted circle has tau = 1/(t-1).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/torsion_class.hpp"

namespace rtorsion {

/// Per degree k, the columns of vectors[k] are cycles in C_k whose classes form
/// a basis of H_k. Degrees with zero homology hold an empty (c_k x 0) matrix.
struct HomologyBasis {
  std::vector<ComplexMatrix> vectors;
};

/// kappa[k] : C_k -> C_{k+1}, stored as a (rank k+1) x (rank k) matrix.
struct ChainContraction {
  std::vector<ComplexMatrix> kappa;
};

struct ContractionResiduals {
  double homotopy = 0.0;  ///< max entry of (d kappa + kappa d - id)
  double square = 0.0;    ///< max entry of kappa^2
};

struct HodgeDegree {
  ComplexMatrix laplacian;
  Eigen::VectorXd eigenvalues;  ///< ascending, real, >= 0 up to rounding
  ComplexMatrix harmonic;       ///< orthonormal basis of ker Laplacian
  ComplexMatrix exact;          ///< orthonormal basis of im d_{k+1}
  ComplexMatrix coexact;        ///< orthonormal basis of im d_k^*
};

struct HodgeData {
  std::vector<HodgeDegree> degrees;
};

struct LaplacianTorsion {
  double value = 1.0;
  HomologyBasis harmonic;  ///< the orthonormal homology basis the value refers to
};

enum class BoundaryBasisChoice {
  PivotedColumns,  ///< b_k = pivot columns of d_{k+1} from column-pivoted QR
  Random,          ///< b_k = d_{k+1} applied to random vectors
};

struct MilnorOptions {
  double rank_tol = 1e-9;
  BoundaryBasisChoice basis = BoundaryBasisChoice::PivotedColumns;
  std::uint64_t seed = 1;
};

/// Per-degree diagnostics of torsion_milnor.
struct MilnorDegree {
  int degree = 0;
  Complex determinant;  ///< det of (b_k h_k b_{k-1}) in the preferred basis
  int exponent = 0;     ///< -(-1)^k
};

/// Transition-determinant torsion, mod sign. Requires `hbasis` whenever the
/// complex has homology; throws NonAcyclicError otherwise.
TorsionClass torsion_milnor(const ComplexChainComplex& c, const std::optional<HomologyBasis>& hbasis = std::nullopt,
                            const MilnorOptions& options = {}, std::vector<MilnorDegree>* diagnostics = nullptr);

/// Contraction from the orthogonal splitting: kappa = pseudo-inverse of d on
/// coexact vectors, so kappa^2 = 0.
ChainContraction build_contraction(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// Contraction from a random (non-orthogonal) splitting C_k = B_k + W_k,
/// still with kappa^2 = 0.
ChainContraction random_contraction(const ComplexChainComplex& c, std::mt19937_64& rng, double rank_tol = 1e-9);

ContractionResiduals contraction_residuals(const ComplexChainComplex& c, const ChainContraction& kappa);

/// det (d + kappa) : C_even -> C_odd, mod sign. The contraction need not
/// satisfy kappa^2 = 0.
TorsionClass torsion_contraction(const ComplexChainComplex& c, const ChainContraction& kappa);
TorsionClass torsion_contraction(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// prod_k (det d : coexact_k -> exact_{k-1})^{(-1)^k} in orthonormal bases,
/// i.e. alternating products of nonzero singular values. Acyclic only.
double torsion_alternating(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// Combinatorial Hodge decomposition. Exact and coexact ranges use ranks
/// relative to boundary_scale; the harmonic space is their orthogonal complement.
HodgeData hodge(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// Orthonormal harmonic representatives of homology.
HomologyBasis harmonic_basis(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// prod_i (det' Laplacian_i)^{i (-1)^i / 2}: |torsion| relative to an
/// orthonormal chain basis and the harmonic homology basis.
LaplacianTorsion laplacian_torsion(const ComplexChainComplex& c, double rank_tol = 1e-9);

/// tau(chi) of the long exact homology sequence of 0 -> C' -> C -> C'' -> 0,
/// so that tau(C) = tau(C') tau(C'') tau(chi) with harmonic homology bases on
/// all three complexes. inclusion[k] : C'_k -> C_k, projection[k] : C_k -> C''_k.
/// The basis of C must be the product basis: det[i(c') | lift(c'')] = +-1.
TorsionClass les_torsion(const ComplexChainComplex& cp, const ComplexChainComplex& c,
                         const ComplexChainComplex& cpp, const std::vector<ComplexMatrix>& inclusion,
                         const std::vector<ComplexMatrix>& projection, double tol = 1e-9);

/// The long exact homology sequence as an acyclic complex: H''_i sits in
/// degree 3i, H_i in 3i+1, H'_i in 3i+2, all in harmonic bases.
ComplexChainComplex long_exact_sequence_complex(const ComplexChainComplex& cp, const ComplexChainComplex& c,
                                                const ComplexChainComplex& cpp,
                                                const std::vector<ComplexMatrix>& inclusion,
                                                const std::vector<ComplexMatrix>& projection, double tol = 1e-9);

/// Multiply every boundary by alpha.
ComplexChainComplex scale_boundaries(const ComplexChainComplex& c, Complex alpha);

}  // namespace rtorsion
