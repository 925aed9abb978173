#pragma once

#include <vector>

#include "rtorsion/chain_complex.hpp"

namespace rtorsion {

/// Nonzero diagonal entries d_1 | d_2 | ... | d_r (all positive) of the Smith
/// normal form of an integer matrix. Exact; r is the rank over Q.
std::vector<Integer> invariant_factors(const ExactMatrix<Integer>& m);

}  // namespace rtorsion
