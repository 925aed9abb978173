#include "rtorsion/torsion.hpp"

#include <algorithm>
#include <cmath>

namespace rtorsion {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t n) { return static_cast<Index>(n); }

Complex determinant(const ComplexMatrix& m) {
  if (m.size() == 0) return {1.0, 0.0};
  return m.partialPivLu().determinant();
}

ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Moore-Penrose inverse, singular values below rel_tol * max(s_max, scale) dropped.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rel_tol, double scale = 0.0) {
  ComplexMatrix out = ComplexMatrix::Zero(m.cols(), m.rows());
  if (m.size() == 0) return out;
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * std::max(s(0), scale)) out += svd.matrixV().col(i) * (1.0 / s(i)) * svd.matrixU().col(i).adjoint();
  return out;
}

// Orthonormal basis of the column space.
ComplexMatrix range_basis(const ComplexMatrix& m, double rel_tol, double scale) {
  if (m.size() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const std::size_t r = numeric_rank(m, rel_tol, scale);
  return svd.matrixU().leftCols(idx(r));
}

void require_acyclic(const ComplexChainComplex& c, double rel_tol, const char* who) {
  const auto h = homology_ranks(c, rel_tol);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0)
      throw NonAcyclicError(std::string(who) + ": H_" + std::to_string(k) + " has dimension " +
                            std::to_string(h[k]));
}

// Column indices of d that span its image, chosen by column-pivoted QR.
std::vector<Index> pivot_columns(const ComplexMatrix& d, std::size_t rank) {
  std::vector<Index> cols;
  if (rank == 0) return cols;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(d);
  const auto& perm = qr.colsPermutation().indices();
  for (std::size_t i = 0; i < rank; ++i) cols.push_back(perm(idx(i)));
  return cols;
}

}  // namespace

TorsionClass torsion_milnor(const ComplexChainComplex& c, const std::optional<HomologyBasis>& hbasis,
                            const MilnorOptions& options, std::vector<MilnorDegree>* diagnostics) {
  require_valid(c);
  const int n = c.top_degree();
  const auto hranks = homology_ranks(c, options.rank_tol);
  const bool acyclic = std::all_of(hranks.begin(), hranks.end(), [](std::size_t h) { return h == 0; });
  if (!acyclic && !hbasis)
    throw NonAcyclicError("torsion of a complex with homology needs a homology basis");
  if (hbasis && hbasis->vectors.size() != c.degree_count())
    throw std::invalid_argument("homology basis has " + std::to_string(hbasis->vectors.size()) +
                                " degrees, complex has " + std::to_string(c.degree_count()));

  // lift[k]: vectors in C_{k+1} whose images under d_{k+1} form the chosen b_k.
  std::vector<ComplexMatrix> lift(c.degree_count());
  std::vector<ComplexMatrix> b(c.degree_count());
  std::mt19937_64 rng(options.seed);
  const double scale = boundary_scale(c);
  for (int k = 0; k <= n; ++k) {
    const ComplexMatrix& d = c.boundary(k + 1);
    const std::size_t r = numeric_rank(d, options.rank_tol, scale);
    ComplexMatrix l;
    if (options.basis == BoundaryBasisChoice::PivotedColumns) {
      l = ComplexMatrix::Zero(d.cols(), idx(r));
      const auto cols = pivot_columns(d, r);
      for (std::size_t j = 0; j < cols.size(); ++j) l(cols[j], idx(j)) = 1.0;
    } else {
      l = random_matrix(d.cols(), idx(r), rng);
    }
    b[static_cast<std::size_t>(k)] = d * l;
    lift[static_cast<std::size_t>(k)] = std::move(l);
  }

  Complex value(1.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    ComplexMatrix h(idx(c.rank(k)), 0);
    if (hbasis) {
      h = hbasis->vectors[uk];
      if (h.rows() != idx(c.rank(k)))
        throw std::invalid_argument("homology basis vectors in degree " + std::to_string(k) + " have length " +
                                    std::to_string(h.rows()) + ", expected " + std::to_string(c.rank(k)));
      if (static_cast<std::size_t>(h.cols()) != hranks[uk])
        throw PreconditionError("homology basis in degree " + std::to_string(k) + " has " +
                                std::to_string(h.cols()) + " classes, H_" + std::to_string(k) + " has dimension " +
                                std::to_string(hranks[uk]));
      const ComplexMatrix dh = c.boundary(k) * h;
      if (max_abs(dh) > 1e-9 * std::max(1.0, c.boundary(k).norm() * h.norm()))
        throw PreconditionError("homology basis vector in degree " + std::to_string(k) + " is not a cycle");
    }
    const ComplexMatrix& below = k > 0 ? lift[uk - 1] : ComplexMatrix(idx(c.rank(k)), 0);
    ComplexMatrix x(idx(c.rank(k)), b[uk].cols() + h.cols() + below.cols());
    x << b[uk], h, below;
    if (x.cols() != x.rows())
      throw PreconditionError("basis in degree " + std::to_string(k) + " has " + std::to_string(x.cols()) +
                              " vectors for rank " + std::to_string(x.rows()));
    if (numeric_rank(x, options.rank_tol) < static_cast<std::size_t>(x.cols()))
      throw PreconditionError("homology basis classes in degree " + std::to_string(k) + " are dependent");
    const Complex det = determinant(x);
    const int exponent = (k % 2 == 0) ? -1 : 1;
    value *= exponent > 0 ? det : 1.0 / det;
    if (diagnostics) diagnostics->push_back({k, det, exponent});
  }
  return {value, Ambiguity::sign_only()};
}

ChainContraction build_contraction(const ComplexChainComplex& c, double rank_tol) {
  require_valid(c);
  require_acyclic(c, rank_tol, "chain contraction");
  const double scale = boundary_scale(c);
  ChainContraction out;
  for (int k = 0; k <= c.top_degree(); ++k) out.kappa.push_back(pseudo_inverse(c.boundary(k + 1), rank_tol, scale));
  return out;
}

ChainContraction random_contraction(const ComplexChainComplex& c, std::mt19937_64& rng, double rank_tol) {
  require_valid(c);
  require_acyclic(c, rank_tol, "chain contraction");
  const int n = c.top_degree();
  const double scale = boundary_scale(c);
  // w[k]: random complement of B_k = im d_{k+1} in C_k, of dimension rank d_k.
  std::vector<ComplexMatrix> w(c.degree_count() + 1);
  for (int k = 0; k <= n; ++k)
    w[static_cast<std::size_t>(k)] =
        random_matrix(idx(c.rank(k)), idx(numeric_rank(c.boundary(k), rank_tol, scale)), rng);
  w[static_cast<std::size_t>(n + 1)] = ComplexMatrix(0, 0);

  ChainContraction out;
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const ComplexMatrix image = c.boundary(k + 1) * w[uk + 1];
    ComplexMatrix basis(idx(c.rank(k)), image.cols() + w[uk].cols());
    basis << image, w[uk];
    ComplexMatrix target = ComplexMatrix::Zero(idx(c.rank(k + 1)), basis.cols());
    target.leftCols(image.cols()) = w[uk + 1];
    out.kappa.push_back(basis.size() == 0 ? ComplexMatrix::Zero(idx(c.rank(k + 1)), idx(c.rank(k)))
                                          : ComplexMatrix(target * basis.inverse()));
  }
  return out;
}

ContractionResiduals contraction_residuals(const ComplexChainComplex& c, const ChainContraction& kappa) {
  const int n = c.top_degree();
  if (kappa.kappa.size() != c.degree_count())
    throw std::invalid_argument("contraction has " + std::to_string(kappa.kappa.size()) + " degrees, expected " +
                                std::to_string(c.degree_count()));
  ContractionResiduals out;
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    ComplexMatrix r = c.boundary(k + 1) * kappa.kappa[uk] - ComplexMatrix::Identity(idx(c.rank(k)), idx(c.rank(k)));
    if (k > 0) r += kappa.kappa[uk - 1] * c.boundary(k);
    out.homotopy = std::max(out.homotopy, max_abs(r));
    if (k < n) out.square = std::max(out.square, max_abs(kappa.kappa[uk + 1] * kappa.kappa[uk]));
  }
  return out;
}

TorsionClass torsion_contraction(const ComplexChainComplex& c, const ChainContraction& kappa) {
  require_valid(c);
  const int n = c.top_degree();
  const ContractionResiduals res = contraction_residuals(c, kappa);
  if (res.homotopy > 1e-8) throw PreconditionError("d kappa + kappa d differs from the identity");

  std::vector<std::size_t> offset(c.degree_count(), 0);
  std::size_t even = 0, odd = 0;
  for (int k = 0; k <= n; ++k) {
    std::size_t& total = (k % 2 == 0) ? even : odd;
    offset[static_cast<std::size_t>(k)] = total;
    total += c.rank(k);
  }
  if (even != odd) throw NonAcyclicError("even and odd chain ranks differ");

  ComplexMatrix m = ComplexMatrix::Zero(idx(odd), idx(even));
  for (int k = 0; k <= n; k += 2) {
    const Index col = idx(offset[static_cast<std::size_t>(k)]);
    if (k >= 1 && c.rank(k - 1) > 0 && c.rank(k) > 0)
      m.block(idx(offset[static_cast<std::size_t>(k - 1)]), col, idx(c.rank(k - 1)), idx(c.rank(k))) =
          c.boundary(k);
    if (k + 1 <= n && c.rank(k + 1) > 0 && c.rank(k) > 0)
      m.block(idx(offset[static_cast<std::size_t>(k + 1)]), col, idx(c.rank(k + 1)), idx(c.rank(k))) =
          kappa.kappa[static_cast<std::size_t>(k)];
  }
  return {determinant(m), Ambiguity::sign_only()};
}

TorsionClass torsion_contraction(const ComplexChainComplex& c, double rank_tol) {
  return torsion_contraction(c, build_contraction(c, rank_tol));
}

double torsion_alternating(const ComplexChainComplex& c, double rank_tol) {
  require_valid(c);
  require_acyclic(c, rank_tol, "alternating torsion");
  const double scale = boundary_scale(c);
  double log_value = 0.0;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const ComplexMatrix& d = c.boundary(k);
    if (d.size() == 0) continue;
    Eigen::JacobiSVD<ComplexMatrix> svd(d);
    const auto& s = svd.singularValues();
    double log_det = 0.0;
    for (Index i = 0; i < s.size(); ++i)
      if (s(i) > rank_tol * scale) log_det += std::log(s(i));
    log_value += (k % 2 == 0) ? log_det : -log_det;
  }
  return std::exp(log_value);
}

HodgeData hodge(const ComplexChainComplex& c, double rank_tol) {
  require_valid(c);
  const double scale = boundary_scale(c);
  HodgeData out;
  for (int k = 0; k <= c.top_degree(); ++k) {
    const ComplexMatrix& down = c.boundary(k);
    const ComplexMatrix& up = c.boundary(k + 1);
    const Index rk = idx(c.rank(k));
    HodgeDegree deg;
    deg.laplacian = ComplexMatrix::Zero(rk, rk);
    if (down.size() > 0) deg.laplacian += down.adjoint() * down;
    if (up.size() > 0) deg.laplacian += up * up.adjoint();
    deg.eigenvalues = rk > 0 ? Eigen::VectorXd(Eigen::SelfAdjointEigenSolver<ComplexMatrix>(deg.laplacian, Eigen::EigenvaluesOnly).eigenvalues())
                             : Eigen::VectorXd(0);
    deg.exact = range_basis(up, rank_tol, scale);
    deg.coexact = range_basis(down.adjoint(), rank_tol, scale);
    // Harmonic vectors as the orthogonal complement of exact + coexact. This
    // avoids the squared conditioning of the Laplacian's eigenvectors.
    const Index used = deg.exact.cols() + deg.coexact.cols();
    if (used >= rk) {
      deg.harmonic = ComplexMatrix(rk, 0);
    } else {
      ComplexMatrix spanned(rk, used);
      spanned << deg.exact, deg.coexact;
      const Eigen::HouseholderQR<ComplexMatrix> qr(spanned);
      const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rk, rk);
      deg.harmonic = q.rightCols(rk - used);
    }
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

HomologyBasis harmonic_basis(const ComplexChainComplex& c, double rank_tol) {
  HomologyBasis out;
  for (auto& deg : hodge(c, rank_tol).degrees) out.vectors.push_back(std::move(deg.harmonic));
  return out;
}

LaplacianTorsion laplacian_torsion(const ComplexChainComplex& c, double rank_tol) {
  HodgeData data = hodge(c, rank_tol);
  LaplacianTorsion out;
  double log_value = 0.0;
  for (int k = 0; k <= c.top_degree(); ++k) {
    auto& deg = data.degrees[static_cast<std::size_t>(k)];
    const Index zeros = deg.harmonic.cols();
    double log_det = 0.0;
    for (Index i = zeros; i < deg.eigenvalues.size(); ++i) log_det += std::log(deg.eigenvalues(i));
    log_value += 0.5 * k * ((k % 2 == 0) ? 1.0 : -1.0) * log_det;
    out.harmonic.vectors.push_back(std::move(deg.harmonic));
  }
  out.value = std::exp(log_value);
  return out;
}

ComplexChainComplex long_exact_sequence_complex(const ComplexChainComplex& cp, const ComplexChainComplex& c,
                                                const ComplexChainComplex& cpp,
                                                const std::vector<ComplexMatrix>& inclusion,
                                                const std::vector<ComplexMatrix>& projection, double tol) {
  require_valid(cp);
  require_valid(c);
  require_valid(cpp);
  const int n = std::max({cp.top_degree(), c.top_degree(), cpp.top_degree()});
  if (inclusion.size() != static_cast<std::size_t>(n + 1) || projection.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("expected one inclusion and one projection matrix per degree 0.." +
                                std::to_string(n));

  // Boundaries past the top of a shorter complex are empty.
  auto bd = [](const ComplexChainComplex& cc, int k) -> ComplexMatrix {
    if (k <= cc.top_degree() + 1) return cc.boundary(k);
    return ComplexMatrix::Zero(idx(cc.rank(k - 1)), idx(cc.rank(k)));
  };
  auto fail = [](int k, const std::string& what) {
    throw PreconditionError("short exact sequence, degree " + std::to_string(k) + ": " + what);
  };
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const ComplexMatrix& i = inclusion[uk];
    const ComplexMatrix& p = projection[uk];
    if (i.rows() != idx(c.rank(k)) || i.cols() != idx(cp.rank(k))) fail(k, "inclusion has wrong shape");
    if (p.rows() != idx(cpp.rank(k)) || p.cols() != idx(c.rank(k))) fail(k, "projection has wrong shape");
    const double scale = std::max(1.0, i.norm() * p.norm());
    if (p.size() > 0 && i.size() > 0 && max_abs(p * i) > tol * scale) fail(k, "projection o inclusion != 0");
    if (numeric_rank(i, tol) != cp.rank(k)) fail(k, "inclusion is not injective");
    if (numeric_rank(p, tol) != cpp.rank(k)) fail(k, "projection is not surjective");
    if (cp.rank(k) + cpp.rank(k) != c.rank(k)) fail(k, "ranks do not add up");
    if (k >= 1) {
      const ComplexMatrix dc = bd(c, k);
      const ComplexMatrix di = dc * i - inclusion[uk - 1] * bd(cp, k);
      const ComplexMatrix dp = bd(cpp, k) * p - projection[uk - 1] * dc;
      if (max_abs(di) > tol * std::max(1.0, dc.norm() * i.norm())) fail(k, "inclusion is not a chain map");
      if (max_abs(dp) > tol * std::max(1.0, dc.norm() * p.norm()))
        fail(k, "projection is not a chain map");
    }
    ComplexMatrix split(idx(c.rank(k)), idx(c.rank(k)));
    if (split.size() > 0) {
      split << i, pseudo_inverse(p, tol);
      if (std::abs(std::abs(determinant(split)) - 1.0) > 1e-6)
        fail(k, "basis of the middle complex is not the product basis");
    }
  }

  const HomologyBasis hp = harmonic_basis(cp);
  const HomologyBasis h = harmonic_basis(c);
  const HomologyBasis hpp = harmonic_basis(cpp);
  auto basis = [](const HomologyBasis& hb, const ComplexChainComplex& cc, int k) {
    return k <= cc.top_degree() ? hb.vectors[static_cast<std::size_t>(k)] : ComplexMatrix(0, 0);
  };

  // H''_k in degree 3k, H_k in 3k+1, H'_k in 3k+2.
  const int top = 3 * n + 2;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  for (int k = 0; k <= n; ++k) {
    ranks[static_cast<std::size_t>(3 * k)] = static_cast<std::size_t>(basis(hpp, cpp, k).cols());
    ranks[static_cast<std::size_t>(3 * k + 1)] = static_cast<std::size_t>(basis(h, c, k).cols());
    ranks[static_cast<std::size_t>(3 * k + 2)] = static_cast<std::size_t>(basis(hp, cp, k).cols());
  }
  std::vector<ComplexMatrix> boundaries;
  for (int j = 1; j <= top; ++j) {
    const int k = j / 3;
    ComplexMatrix d;
    switch (j % 3) {
      case 2:  // H'_k -> H_k
        d = basis(h, c, k).adjoint() * inclusion[static_cast<std::size_t>(k)] * basis(hp, cp, k);
        break;
      case 1:  // H_k -> H''_k
        d = basis(hpp, cpp, k).adjoint() * projection[static_cast<std::size_t>(k)] * basis(h, c, k);
        break;
      default: {  // H''_k -> H'_{k-1}
        const auto uk = static_cast<std::size_t>(k);
        const ComplexMatrix lifted = pseudo_inverse(projection[uk], tol) * basis(hpp, cpp, k);
        const ComplexMatrix pulled = pseudo_inverse(inclusion[uk - 1], tol) * (bd(c, k) * lifted);
        d = basis(hp, cp, k - 1).adjoint() * pulled;
        break;
      }
    }
    ComplexMatrix sized = ComplexMatrix::Zero(idx(ranks[static_cast<std::size_t>(j - 1)]),
                                              idx(ranks[static_cast<std::size_t>(j)]));
    if (sized.size() > 0) sized = d;
    boundaries.push_back(std::move(sized));
  }
  return ComplexChainComplex(std::move(ranks), std::move(boundaries));
}

TorsionClass les_torsion(const ComplexChainComplex& cp, const ComplexChainComplex& c, const ComplexChainComplex& cpp,
                         const std::vector<ComplexMatrix>& inclusion, const std::vector<ComplexMatrix>& projection,
                         double tol) {
  const ComplexChainComplex chi = long_exact_sequence_complex(cp, c, cpp, inclusion, projection, tol);
  if (!is_acyclic(chi, 1e-9)) throw PreconditionError("homology sequence is not exact");
  return torsion_milnor(chi);
}

ComplexChainComplex scale_boundaries(const ComplexChainComplex& c, Complex alpha) {
  std::vector<ComplexMatrix> boundaries = c.boundary_list();
  for (auto& d : boundaries) d *= alpha;
  ComplexChainComplex out(c.ranks(), std::move(boundaries));
  out.set_labels(c.labels());
  return out;
}

}  // namespace rtorsion
