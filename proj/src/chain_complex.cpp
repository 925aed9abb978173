#include "rtorsion/chain_complex.hpp"

#include <algorithm>
#include <sstream>

#include "rtorsion/smith_normal_form.hpp"

namespace rtorsion {

ComplexChainComplex specialize(const GroupRingComplex& c, const Representation& rep) {
  if (!rep.admissible_for(c.modulus()))
    throw std::invalid_argument("representation " + rep.to_string() + " is incompatible with Z[Z_" +
                                std::to_string(c.modulus()) + "]");
  std::vector<ComplexMatrix> boundaries;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& d = c.boundary(k);
    ComplexMatrix m(static_cast<Eigen::Index>(d.rows()), static_cast<Eigen::Index>(d.cols()));
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate(d(i, j), rep);
    boundaries.push_back(std::move(m));
  }
  ComplexChainComplex out(c.ranks(), std::move(boundaries));
  out.set_labels(c.labels());
  return out;
}

IntegerComplex specialize_to_integers(const GroupRingComplex& c) {
  std::vector<ExactMatrix<Integer>> boundaries;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& d = c.boundary(k);
    ExactMatrix<Integer> m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) m(i, j) = Integer(d(i, j).augmentation());
    boundaries.push_back(std::move(m));
  }
  IntegerComplex out(c.ranks(), std::move(boundaries));
  out.set_labels(c.labels());
  return out;
}

ComplexChainComplex to_complex(const IntegerComplex& c) {
  std::vector<ComplexMatrix> boundaries;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& d = c.boundary(k);
    ComplexMatrix m(static_cast<Eigen::Index>(d.rows()), static_cast<Eigen::Index>(d.cols()));
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(d(i, j).convert_to<double>(), 0.0);
    boundaries.push_back(std::move(m));
  }
  ComplexChainComplex out(c.ranks(), std::move(boundaries));
  out.set_labels(c.labels());
  return out;
}

std::size_t numeric_rank(const ComplexMatrix& m, double rel_tol, double scale) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = rel_tol * std::max(s(0), scale);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return r;
}

double boundary_scale(const ComplexChainComplex& c) {
  double scale = 0.0;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const ComplexMatrix& d = c.boundary(k);
    if (d.size() == 0) continue;
    Eigen::JacobiSVD<ComplexMatrix> svd(d);
    if (svd.singularValues().size() > 0) scale = std::max(scale, svd.singularValues()(0));
  }
  return scale;
}

std::vector<std::size_t> homology_ranks(const ComplexChainComplex& c, double rel_tol) {
  require_valid(c);
  const double scale = boundary_scale(c);
  std::vector<std::size_t> image_rank(c.degree_count() + 2, 0);
  for (int k = 1; k <= c.top_degree(); ++k)
    image_rank[static_cast<std::size_t>(k)] = numeric_rank(c.boundary(k), rel_tol, scale);
  std::vector<std::size_t> out;
  for (int k = 0; k <= c.top_degree(); ++k) {
    const long long h = static_cast<long long>(c.rank(k)) -
                        static_cast<long long>(image_rank[static_cast<std::size_t>(k)]) -
                        static_cast<long long>(image_rank[static_cast<std::size_t>(k + 1)]);
    out.push_back(static_cast<std::size_t>(std::max(0LL, h)));
  }
  return out;
}

bool is_acyclic(const ComplexChainComplex& c, double rel_tol) {
  for (std::size_t h : homology_ranks(c, rel_tol))
    if (h != 0) return false;
  return true;
}

std::string IntegralHomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const Integer& d : torsion) {
    if (!first) os << " + ";
    os << "Z_" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<IntegralHomologyGroup> integral_homology(const IntegerComplex& c) {
  require_valid(c);
  std::vector<std::vector<Integer>> factors(c.degree_count() + 2);
  for (int k = 1; k <= c.top_degree(); ++k) factors[static_cast<std::size_t>(k)] = invariant_factors(c.boundary(k));
  std::vector<IntegralHomologyGroup> out;
  for (int k = 0; k <= c.top_degree(); ++k) {
    const auto& outgoing = factors[static_cast<std::size_t>(k)];
    const auto& incoming = factors[static_cast<std::size_t>(k + 1)];
    IntegralHomologyGroup h;
    h.betti = c.rank(k) - outgoing.size() - incoming.size();
    for (const Integer& d : incoming)
      if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

ComplexChainComplex tensor_product(const ComplexChainComplex& x, const IntegerComplex& y) {
  require_valid(x);
  require_valid(y);
  const int nx = x.top_degree();
  const int ny = y.top_degree();
  const int n = nx + ny;

  // offset[m][a]: position of the block C_a (x) D_{m-a} inside total degree m.
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(n + 1),
                                               std::vector<std::size_t>(static_cast<std::size_t>(nx + 1), 0));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
  for (int m = 0; m <= n; ++m) {
    std::size_t pos = 0;
    for (int a = 0; a <= nx; ++a) {
      offset[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)] = pos;
      pos += x.rank(a) * y.rank(m - a);
    }
    ranks[static_cast<std::size_t>(m)] = pos;
  }

  std::vector<ComplexMatrix> boundaries;
  for (int m = 1; m <= n; ++m) {
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(ranks[static_cast<std::size_t>(m - 1)]),
                                          static_cast<Eigen::Index>(ranks[static_cast<std::size_t>(m)]));
    for (int a = 0; a <= nx; ++a) {
      const int b = m - a;
      if (b < 0 || b > ny) continue;
      const std::size_t ry = y.rank(b);
      const std::size_t src = offset[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)];
      // dx (x) y lands in block (a-1, b).
      if (a >= 1) {
        const auto& dx = x.boundary(a);
        const std::size_t dst = offset[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(a - 1)];
        for (Eigen::Index i = 0; i < dx.rows(); ++i)
          for (Eigen::Index j = 0; j < dx.cols(); ++j) {
            if (dx(i, j) == Complex(0.0, 0.0)) continue;
            for (std::size_t t = 0; t < ry; ++t)
              d(static_cast<Eigen::Index>(dst + static_cast<std::size_t>(i) * ry + t),
                static_cast<Eigen::Index>(src + static_cast<std::size_t>(j) * ry + t)) += dx(i, j);
          }
      }
      // (-1)^a x (x) dy lands in block (a, b-1).
      if (b >= 1) {
        const auto& dy = y.boundary(b);
        const std::size_t ry_low = y.rank(b - 1);
        const std::size_t dst = offset[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(a)];
        const double sign = (a % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t s = 0; s < x.rank(a); ++s)
          for (std::size_t i = 0; i < dy.rows(); ++i)
            for (std::size_t j = 0; j < dy.cols(); ++j) {
              if (dy(i, j) == 0) continue;
              d(static_cast<Eigen::Index>(dst + s * ry_low + i), static_cast<Eigen::Index>(src + s * ry + j)) +=
                  sign * dy(i, j).convert_to<double>();
            }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ComplexChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace rtorsion
