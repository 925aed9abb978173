#pragma once

// Finite based chain complexes C_n -> ... -> C_0 over Z[Z_p] / Z[Z], over the
// integers, or over the complex numbers. boundary(k) is the matrix of
// d_k : C_k -> C_{k-1} in the preferred bases (ranks[k-1] rows, ranks[k] columns).

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/exact_matrix.hpp"
#include "rtorsion/group_ring.hpp"

namespace rtorsion {

using Integer = boost::multiprecision::cpp_int;
using ComplexMatrix = Eigen::MatrixXcd;

enum class ScalarDomain { GroupRing, Integer, Complex };

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GroupRingElement> {
  using Matrix = ExactMatrix<GroupRingElement>;
  static constexpr ScalarDomain domain = ScalarDomain::GroupRing;
  static Matrix zeros(std::size_t r, std::size_t c, std::int64_t modulus) {
    return Matrix(r, c, GroupRingElement::zero(modulus));
  }
  static GroupRingElement conjugate(const GroupRingElement& x) { return x.involution(); }
  static bool product_vanishes(const Matrix& a, const Matrix& b) { return (a * b).is_zero(); }
};

template <>
struct ScalarTraits<Integer> {
  using Matrix = ExactMatrix<Integer>;
  static constexpr ScalarDomain domain = ScalarDomain::Integer;
  static Matrix zeros(std::size_t r, std::size_t c, std::int64_t) { return Matrix(r, c, Integer(0)); }
  static Integer conjugate(const Integer& x) { return x; }
  static bool product_vanishes(const Matrix& a, const Matrix& b) { return (a * b).is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  using Matrix = ComplexMatrix;
  static constexpr ScalarDomain domain = ScalarDomain::Complex;
  static Matrix zeros(std::size_t r, std::size_t c, std::int64_t) {
    return Matrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  static Complex conjugate(const Complex& x) { return std::conj(x); }
  /// Entrywise |(ab)_ij| <= 1e-12 * |a|_F |b|_F.
  static bool product_vanishes(const Matrix& a, const Matrix& b) {
    if (a.size() == 0 || b.size() == 0) return true;
    const double scale = std::max(1.0, a.norm() * b.norm());
    return (a * b).cwiseAbs().maxCoeff() <= 1e-12 * scale;
  }
};

template <class S>
using MatrixOf = typename ScalarTraits<S>::Matrix;

template <class M>
std::size_t row_count(const M& m) {
  return static_cast<std::size_t>(m.rows());
}
template <class M>
std::size_t col_count(const M& m) {
  return static_cast<std::size_t>(m.cols());
}

template <class S>
class BasedChainComplex {
 public:
  using Scalar = S;
  using Matrix = MatrixOf<S>;
  using Traits = ScalarTraits<S>;

  /// `boundaries` lists d_1 .. d_n (so ranks.size() == boundaries.size() + 1).
  /// Dimensions and d^2 = 0 are not checked here; see validate().
  /// `modulus` is the group ring modulus and is ignored for other domains.
  BasedChainComplex(std::vector<std::size_t> ranks, std::vector<Matrix> boundaries, std::int64_t modulus = 0)
      : ranks_(std::move(ranks)), modulus_(modulus) {
    if (ranks_.empty()) throw std::invalid_argument("chain complex needs at least one degree");
    if (boundaries.size() + 1 != ranks_.size())
      throw std::invalid_argument("expected " + std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                                  std::to_string(boundaries.size()));
    boundaries_.reserve(ranks_.size() + 1);
    boundaries_.push_back(Traits::zeros(0, ranks_.front(), modulus_));
    for (auto& b : boundaries) boundaries_.push_back(std::move(b));
    boundaries_.push_back(Traits::zeros(ranks_.back(), 0, modulus_));
  }

  static constexpr ScalarDomain domain() { return Traits::domain; }
  std::int64_t modulus() const noexcept { return modulus_; }

  /// n: the complex lives in degrees 0..n.
  int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t degree_count() const noexcept { return ranks_.size(); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t rank(int k) const {
    return (k < 0 || k > top_degree()) ? 0 : ranks_[static_cast<std::size_t>(k)];
  }

  /// d_k for 0 <= k <= n+1; d_0 and d_{n+1} are the empty maps.
  const Matrix& boundary(int k) const {
    if (k < 0 || k > top_degree() + 1) throw std::out_of_range("boundary degree out of range");
    return boundaries_[static_cast<std::size_t>(k)];
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < ranks_.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks_[k]);
    return chi;
  }

  /// Optional per-degree basis labels (empty when absent).
  const std::vector<std::vector<std::string>>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::vector<std::string>> labels) { labels_ = std::move(labels); }

  /// d_1 .. d_n, the form accepted by the constructor.
  std::vector<Matrix> boundary_list() const {
    return {boundaries_.begin() + 1, boundaries_.end() - 1};
  }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> boundaries_;
  std::vector<std::vector<std::string>> labels_;
  std::int64_t modulus_ = 0;
};

using GroupRingComplex = BasedChainComplex<GroupRingElement>;
using IntegerComplex = BasedChainComplex<Integer>;
using ComplexChainComplex = BasedChainComplex<Complex>;

struct ValidationReport {
  bool ok = true;
  int degree = -1;  ///< first violated degree, -1 when ok
  std::string message;
};

template <class S>
ValidationReport validate(const BasedChainComplex<S>& c) {
  using Traits = ScalarTraits<S>;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& d = c.boundary(k);
    if (row_count(d) != c.rank(k - 1) || col_count(d) != c.rank(k))
      return {false, k,
              "boundary " + std::to_string(k) + " is " + std::to_string(row_count(d)) + "x" +
                  std::to_string(col_count(d)) + ", expected " + std::to_string(c.rank(k - 1)) + "x" +
                  std::to_string(c.rank(k))};
  }
  if constexpr (Traits::domain == ScalarDomain::GroupRing) {
    for (int k = 1; k <= c.top_degree(); ++k) {
      const auto& d = c.boundary(k);
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
          if (d(i, j).modulus() != c.modulus())
            return {false, k, "entry modulus differs from the complex's group ring"};
    }
  }
  for (int k = 2; k <= c.top_degree(); ++k)
    if (!Traits::product_vanishes(c.boundary(k - 1), c.boundary(k)))
      return {false, k, "d_" + std::to_string(k - 1) + " * d_" + std::to_string(k) + " != 0"};
  return {};
}

template <class S>
void require_valid(const BasedChainComplex<S>& c) {
  const ValidationReport report = validate(c);
  if (!report.ok) throw InvalidComplexError(report.degree, report.message);
}

/// Conjugate transpose: involution entrywise over group rings, complex
/// conjugation over C, plain transpose over Z.
template <class S>
MatrixOf<S> adjoint(const MatrixOf<S>& m, std::int64_t modulus) {
  using Traits = ScalarTraits<S>;
  MatrixOf<S> out = Traits::zeros(col_count(m), row_count(m), modulus);
  for (std::size_t i = 0; i < row_count(m); ++i)
    for (std::size_t j = 0; j < col_count(m); ++j)
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          Traits::conjugate(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  return out;
}

/// (C^v)_{n-k} = (C_k)^v with d^v_{n-k+1} = (d_k)^dagger.
template <class S>
BasedChainComplex<S> dual_complex(const BasedChainComplex<S>& c) {
  const int n = c.top_degree();
  std::vector<std::size_t> ranks(c.degree_count());
  for (int j = 0; j <= n; ++j) ranks[static_cast<std::size_t>(j)] = c.rank(n - j);
  std::vector<MatrixOf<S>> boundaries;
  for (int j = 1; j <= n; ++j) boundaries.push_back(adjoint<S>(c.boundary(n - j + 1), c.modulus()));
  BasedChainComplex<S> out(std::move(ranks), std::move(boundaries), c.modulus());
  if (!c.labels().empty()) {
    std::vector<std::vector<std::string>> labels(c.labels().rbegin(), c.labels().rend());
    out.set_labels(std::move(labels));
  }
  return out;
}

/// Block sum; ranks add degreewise (the shorter complex is padded with zeros).
template <class S>
BasedChainComplex<S> direct_sum(const BasedChainComplex<S>& a, const BasedChainComplex<S>& b) {
  using Traits = ScalarTraits<S>;
  if constexpr (Traits::domain == ScalarDomain::GroupRing)
    if (a.modulus() != b.modulus()) throw ModulusMismatchError(a.modulus(), b.modulus());
  const int n = std::max(a.top_degree(), b.top_degree());
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= n; ++k) ranks.push_back(a.rank(k) + b.rank(k));
  std::vector<MatrixOf<S>> boundaries;
  for (int k = 1; k <= n; ++k) {
    MatrixOf<S> d = Traits::zeros(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)],
                                  a.modulus());
    auto place = [&](const BasedChainComplex<S>& src, std::size_t row0, std::size_t col0) {
      if (k > src.top_degree()) return;
      const auto& m = src.boundary(k);
      for (std::size_t i = 0; i < row_count(m); ++i)
        for (std::size_t j = 0; j < col_count(m); ++j)
          d(static_cast<Eigen::Index>(row0 + i), static_cast<Eigen::Index>(col0 + j)) =
              m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    place(a, 0, 0);
    place(b, a.rank(k - 1), a.rank(k));
    boundaries.push_back(std::move(d));
  }
  return BasedChainComplex<S>(std::move(ranks), std::move(boundaries), a.modulus());
}

/// Change of rings C (x)_{Z[pi]} C along sigma -> rep.value(): entrywise evaluation.
ComplexChainComplex specialize(const GroupRingComplex& c, const Representation& rep);

/// Change of rings along the augmentation sigma -> 1 (integral chains downstairs).
IntegerComplex specialize_to_integers(const GroupRingComplex& c);

/// Regard an integer complex as a complex one.
ComplexChainComplex to_complex(const IntegerComplex& c);

/// Numerical rank: singular values above rel_tol * max(largest singular value, scale).
/// Pass the complex's boundary_scale so that a boundary made of rounding noise
/// (e.g. nu evaluated at eta != 1) has rank 0.
std::size_t numeric_rank(const ComplexMatrix& m, double rel_tol = 1e-9, double scale = 0.0);

/// Largest singular value over all boundaries of the complex (0 if all vanish).
double boundary_scale(const ComplexChainComplex& c);

/// dim ker d_k - rank d_{k+1} in every degree, ranks relative to boundary_scale.
std::vector<std::size_t> homology_ranks(const ComplexChainComplex& c, double rel_tol = 1e-9);

bool is_acyclic(const ComplexChainComplex& c, double rel_tol = 1e-9);

struct IntegralHomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1, in divisibility order

  friend bool operator==(const IntegralHomologyGroup&, const IntegralHomologyGroup&) = default;
  std::string to_string() const;
};

/// H_k = Z^betti (+) Z/d_1 (+) ... from the Smith normal forms of the boundaries.
std::vector<IntegralHomologyGroup> integral_homology(const IntegerComplex& c);

/// Graded tensor product with the Koszul sign
/// d(x (x) y) = dx (x) y + (-1)^{deg x} x (x) dy. In each total degree the basis
/// runs over X-degree ascending, then X-index, then Y-index.
ComplexChainComplex tensor_product(const ComplexChainComplex& x, const IntegerComplex& y);

}  // namespace rtorsion
