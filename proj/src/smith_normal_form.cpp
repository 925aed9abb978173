#include "rtorsion/smith_normal_form.hpp"

#include <utility>

namespace rtorsion {

namespace {

using Mat = ExactMatrix<Integer>;

void swap_rows(Mat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(Mat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// Moves the smallest nonzero |entry| of the trailing block at (t, t) to (t, t).
bool bring_min_to_pivot(Mat& a, std::size_t t) {
  bool found = false;
  std::size_t bi = t, bj = t;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      const Integer mag = abs(a(i, j));
      if (!found || mag < best) {
        best = mag;
        bi = i;
        bj = j;
        found = true;
      }
    }
  if (!found) return false;
  swap_rows(a, t, bi);
  swap_cols(a, t, bj);
  return true;
}

}  // namespace

std::vector<Integer> invariant_factors(const ExactMatrix<Integer>& m) {
  Mat a = m;
  std::vector<Integer> diag;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!bring_min_to_pivot(a, t)) break;
    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        for (std::size_t c = t; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
        if (a(i, t) != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        for (std::size_t r = t; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        bring_min_to_pivot(a, t);
        continue;
      }
      // Pivot must divide the remaining block; otherwise fold the offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

}  // namespace rtorsion
