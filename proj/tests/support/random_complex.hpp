#pragma once

// Random based complexes over C with a known shape.
//
// C_k = B_k + H_k + W_k in a hidden basis, d_k maps W_k isomorphically onto
// B_{k-1} and kills the rest; the visible basis is obtained by a random
// well-conditioned change of basis G_k in every degree.

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "rtorsion/chain_complex.hpp"

namespace rtorsion::test_support {

struct RandomComplexShape {
  int max_degrees = 5;  ///< degrees 0..n with n + 1 <= max_degrees
  int max_rank = 6;
  int max_harmonic = 0;  ///< per-degree homology dimension drawn from [0, max_harmonic]
};

inline ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

// Condition number below 1e3 so that the visible torsion stays O(1)-accurate.
inline ComplexMatrix random_invertible(Eigen::Index n, std::mt19937_64& rng) {
  for (;;) {
    ComplexMatrix g = random_gaussian(n, n, rng);
    if (n == 0) return g;
    Eigen::JacobiSVD<ComplexMatrix> svd(g);
    const auto& s = svd.singularValues();
    if (s(n - 1) > 0 && s(0) / s(n - 1) < 1e3) return g;
  }
}

/// A random complex together with its torsion computed from the hidden
/// structure: prod_k det(A_{k+1})^{-(-1)^k} det(G_k)^{-(-1)^k}, where A_k is the
/// block W_k -> B_{k-1}. Only meaningful when the complex is acyclic.
struct KnownComplex {
  ComplexChainComplex complex;
  Complex torsion;
};

inline KnownComplex random_known_complex(std::mt19937_64& rng, const RandomComplexShape& shape = {}) {
  std::uniform_int_distribution<int> degrees_dist(2, shape.max_degrees);
  const int count = degrees_dist(rng);
  for (;;) {
    // b[k] = dim B_k for k = 0..count-1 (b[count-1] = 0), h[k] = dim H_k.
    std::vector<int> b(static_cast<std::size_t>(count), 0), h(static_cast<std::size_t>(count), 0);
    std::uniform_int_distribution<int> bdist(1, 3);
    std::uniform_int_distribution<int> hdist(0, shape.max_harmonic);
    for (int k = 0; k + 1 < count; ++k) b[static_cast<std::size_t>(k)] = bdist(rng);
    for (int k = 0; k < count; ++k) h[static_cast<std::size_t>(k)] = hdist(rng);
    std::vector<std::size_t> ranks;
    bool fits = true;
    for (int k = 0; k < count; ++k) {
      const int c = b[static_cast<std::size_t>(k)] + h[static_cast<std::size_t>(k)] +
                    (k > 0 ? b[static_cast<std::size_t>(k - 1)] : 0);
      if (c > shape.max_rank) fits = false;
      ranks.push_back(static_cast<std::size_t>(c));
    }
    if (!fits) continue;

    std::vector<ComplexMatrix> g;
    for (int k = 0; k < count; ++k) g.push_back(random_invertible(static_cast<Eigen::Index>(ranks[static_cast<std::size_t>(k)]), rng));
    std::vector<ComplexMatrix> boundaries;
    Complex torsion(1.0, 0.0);
    for (int k = 0; k < count; ++k) {
      const Complex det_g = g[static_cast<std::size_t>(k)].size() == 0 ? Complex(1.0) : g[static_cast<std::size_t>(k)].determinant();
      torsion *= (k % 2 == 0) ? 1.0 / det_g : det_g;
    }
    for (int k = 1; k < count; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const Eigen::Index bk = b[uk - 1];
      ComplexMatrix std_d = ComplexMatrix::Zero(static_cast<Eigen::Index>(ranks[uk - 1]), static_cast<Eigen::Index>(ranks[uk]));
      // W_k occupies the last b_{k-1} coordinates of C_k, B_{k-1} the first of C_{k-1}.
      const ComplexMatrix a = random_invertible(bk, rng);
      std_d.block(0, static_cast<Eigen::Index>(ranks[uk]) - bk, bk, bk) = a;
      // A_k enters X_{k-1}.
      torsion *= ((k - 1) % 2 == 0) ? 1.0 / a.determinant() : a.determinant();
      boundaries.push_back(g[uk - 1] * std_d * g[uk].inverse());
    }
    return {ComplexChainComplex(std::move(ranks), std::move(boundaries)), torsion};
  }
}

inline ComplexChainComplex random_complex(std::mt19937_64& rng, const RandomComplexShape& shape = {}) {
  return random_known_complex(rng, shape).complex;
}

inline ComplexChainComplex random_acyclic_complex(std::mt19937_64& rng, int max_degrees = 5, int max_rank = 6) {
  return random_complex(rng, {max_degrees, max_rank, 0});
}

/// C with 0 -> C' -> C -> C'' -> 0 split degreewise: C_k = C'_k + C''_k and
/// d = [[d', d'S - Sd''], [0, d'']] for random S_k : C''_k -> C'_k. The basis of
/// C is the product basis.
inline ComplexChainComplex random_extension(const ComplexChainComplex& cp, const ComplexChainComplex& cpp,
                                            std::mt19937_64& rng) {
  const int n = std::max(cp.top_degree(), cpp.top_degree());
  std::vector<ComplexMatrix> s;
  for (int k = 0; k <= n; ++k)
    s.push_back(random_gaussian(static_cast<Eigen::Index>(cp.rank(k)), static_cast<Eigen::Index>(cpp.rank(k)), rng));
  auto bd = [](const ComplexChainComplex& c, int k) {
    if (k <= c.top_degree()) return ComplexMatrix(c.boundary(k));
    return ComplexMatrix(ComplexMatrix::Zero(static_cast<Eigen::Index>(c.rank(k - 1)), static_cast<Eigen::Index>(c.rank(k))));
  };
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= n; ++k) ranks.push_back(cp.rank(k) + cpp.rank(k));
  std::vector<ComplexMatrix> boundaries;
  for (int k = 1; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Eigen::Index r0 = static_cast<Eigen::Index>(cp.rank(k - 1)), r1 = static_cast<Eigen::Index>(cp.rank(k));
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(ranks[uk - 1]), static_cast<Eigen::Index>(ranks[uk]));
    const ComplexMatrix dp = bd(cp, k), dpp = bd(cpp, k);
    const ComplexMatrix x = dp * s[uk] - s[uk - 1] * dpp;
    if (dp.size() > 0) d.block(0, 0, r0, r1) = dp;
    if (x.size() > 0) d.block(0, r1, r0, x.cols()) = x;
    if (dpp.size() > 0) d.block(r0, r1, dpp.rows(), dpp.cols()) = dpp;
    boundaries.push_back(std::move(d));
  }
  return ComplexChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace rtorsion::test_support
